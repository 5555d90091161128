// Flat key=value experiment configuration (one experiment per file).
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plap/evolution.hpp"
#include "plap/spectral.hpp"

namespace plap::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raw key=value pairs. Lines starting with '#' or ';' are comments.
std::map<std::string, std::string> parse_key_values(const std::string& text);

struct ExperimentConfig {
    double length = 3.141592653589793;
    std::size_t n = 63;

    double p = 2.0;
    std::vector<double> p_list;
    std::string lambda_spec = "0";
    std::string g_spec = "zero";
    double g_scale = 1.0;
    std::string u0_spec = "zero";
    double u0_scale = 1.0;
    /// Offset delta * phi_1 added to the p = 2 initial state in
    /// semigroup-continuity runs.
    double u2_offset = 0.0;

    SolverConfig solver;
    std::string method = "auto";  ///< evolve: auto | exact | backward-euler | both
    double eq_tol = 1e-10;
    int restarts = 5;
    double transient_time = 10.0;
    std::size_t ic_random = 8;

    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::size_t count = 100000;  ///< Tartar samples for verify-bounds
    std::size_t ghidaglia_count = 100;
    bool svg = false;
    std::filesystem::path out = ".";

    /// Directory of the config file; relative file: specs resolve here.
    std::filesystem::path base_dir = ".";

    /// Canonical key=value lines of every setting, in key order.
    std::vector<std::string> resolved() const;
};

ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = ".");
ExperimentConfig load_config(const std::filesystem::path& path);

/// Accepts a number, "pi", "<c>*pi" or "pi*<c>".
double parse_scalar(const std::string& text);

/// "<x>", "lambda<j>", "<c>*lambda<j>" or "mid:<i>:<j>" (mean of two
/// discrete eigenvalues).
double resolve_lambda(const std::string& spec, const SpectralBasis& basis);

/// "zero" | "mode:<j>" | "file:<path>" | "random:<seed>", times scale.
GridFunction resolve_field(const std::string& spec, double scale, const SpectralBasis& basis,
                           const std::filesystem::path& base_dir);

}  // namespace plap::cli
