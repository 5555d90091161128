// Plain-text formats: GridFunction files, trajectory CSV and attractor
// sample directories. Numbers are written with 17 significant digits in
// the classic locale so output is reproducible byte for byte.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "plap/asymptotics.hpp"
#include "plap/trajectory.hpp"

namespace plap {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_number(double x);

/// "# n=<n> L=<L>" followed by one value per line.
void write_grid_function(std::ostream& os, const GridFunction& u);
void save_grid_function(const std::filesystem::path& path, const GridFunction& u);
GridFunction read_grid_function(std::istream& is);
GridFunction load_grid_function(const std::filesystem::path& path);

struct TrajectoryCsvHeader {
    std::vector<std::string> comments;  ///< extra "# ..." lines written first
    std::string tau;                    ///< time step, or "exact"
};

/// Comment lines, "# p=.. lambda=.. L=.. n=.. tau=..", the column row
/// t,node_1..node_n, then one row per sample.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const TrajectoryCsvHeader& header);

struct CsvTable {
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Parses any CSV in the project dialect ('#' comments, one header row).
CsvTable read_csv(std::istream& is);

/// state_000.txt, state_001.txt, ... plus manifest.json with p, lambda,
/// transient_time, max_v_norm and the state file list.
void save_attractor_sample(const std::filesystem::path& dir, const AttractorSample& sample);

}  // namespace plap
