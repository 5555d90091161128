// Experiment subcommands. Each writes its outputs under config.out and
// returns a process exit code.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "plap/cli/config.hpp"

namespace plap::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitNumerical = 3,
    kExitViolation = 4,
};

struct SemigroupGap {
    double p;
    double sup_gap;  ///< max over recorded t <= T of norm_l2(u_p(t) - u_2(t))
};

struct SemigroupContinuity {
    std::vector<SemigroupGap> gaps;
    double slope;  ///< least-squares slope of log(sup_gap) against log(p - 2)
};

/// Runs the p-flow and the p = 2 flow with the same implicit scheme, step
/// and sample times; the p = 2 flow starts from u0 + u2_offset * phi_1.
SemigroupContinuity semigroup_continuity(const GridFunction& u0, const ProblemParams& params_base,
                                         const std::vector<double>& p_list, const SolverConfig& cfg,
                                         double u2_offset, unsigned workers);

/// Ordinary least-squares slope of y against x; NaN with fewer than two
/// points.
double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

int cmd_evolve(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
int cmd_semigroup_continuity(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
int cmd_equilibrium_sweep(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
int cmd_attractor(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify_bounds(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches by subcommand name; unknown names are config errors.
int run_command(const std::string& name, const ExperimentConfig& config, std::ostream& out, std::ostream& err);

}  // namespace plap::cli
