// Backward-Euler integration of du/dt + A_p u = lambda u + g. Each step is
// the proximal problem
//
//   v = argmin 1/2 |v - u|^2 + tau (J_p(v) - lambda/2 |v|^2 - <g, v>),
//
// strictly convex while tau * max(lambda, 0) < 1, and solved by damped
// Newton on its gradient with a tridiagonal Jacobian.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plap/trajectory.hpp"

namespace plap {

/// Numerical failure (Newton stall, iteration cap, non-finite state).
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double last_residual)
        : std::runtime_error(what), last_residual_(last_residual) {}
    double last_residual() const noexcept { return last_residual_; }

private:
    double last_residual_;
};

struct SolverConfig {
    double tau = 1e-3;
    double t_final = 1.0;
    /// Step residual target is newton_tol * (1 + norm_l2(u)).
    double newton_tol = 1e-10;
    int max_newton_iters = 50;
    int record_every = 1;
};

/// Throws DomainError unless tau > 0, t_final >= 0, the counters are
/// positive and tau * max(lambda, 0) < 1.
void validate(const SolverConfig& cfg, const ProblemParams& params);

/// Below this distance from 2 the step is the exact linear p = 2 step.
inline constexpr double kLinearSwitch = 1e-8;

/// Sample times evolve records for cfg: 0, every record_every-th step time
/// and t_final.
std::vector<double> recording_times(const SolverConfig& cfg);

GridFunction step_backward_euler(const GridFunction& u, const ProblemParams& params, const SolverConfig& cfg);

/// Steps from u0 to cfg.t_final (last step shortened to land on it),
/// recording (0, u0), every record_every-th step and the final state.
Trajectory evolve(const GridFunction& u0, const ProblemParams& params, const SolverConfig& cfg);

/// (t, norm_V_p(u(t), p)) per sample, p taken from the trajectory.
std::vector<std::pair<double, double>> v_norm_diagnostic(const Trajectory& traj);

}  // namespace plap
