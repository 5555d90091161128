// Equilibria A_p u = lambda u + g, for p = 2 by a direct tridiagonal solve
// and for p > 2 as critical points of
//
//   E~_p(u) = J_p(u) - lambda/2 |u|^2 - <g, u>.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "plap/operators.hpp"

namespace plap {

/// lambda coincides with a discrete eigenvalue: A_2 - lambda is singular and
/// the linear problem has no (unique) equilibrium.
class ResonanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EquilibriumResult {
    GridFunction state;
    double residual;  ///< norm_l2 of grad_tilde_Ep at state
    int iterations;
    double energy;    ///< E~_p at state
};

struct EquilibriumOptions {
    int max_iters = 500;
    /// Starts used when lambda > 0 (the supplied guess plus seeded random
    /// states); the lowest-energy critical point wins.
    int restarts = 5;
    std::uint64_t seed = 20240601;
};

EquilibriumResult solve_equilibrium_2(const ProblemParams& params);

/// Requires p > 2. Newton on grad E~_p with a Levenberg shift whenever the
/// Hessian is indefinite, Armijo backtracking on E~_p, and steepest descent
/// as fallback.
EquilibriumResult solve_equilibrium_p(const ProblemParams& params, const GridFunction& initial_guess, double tol,
                                      const EquilibriumOptions& options = {});

struct SweepEntry {
    double p;
    double gap_v2;  ///< norm_V_p(u_p* - u_2*, 2)
    double gap_vp;  ///< norm_V_p(u_p* - u_2*, p)
    double residual;
    int iterations;
    GridFunction state;
};

/// u_p* for each p of a strictly decreasing list above 2, each warm-started
/// from its predecessor (the first from u_2*), against u_2*. Requires
/// lambda < lambda_1.
std::vector<SweepEntry> sweep_equilibrium_continuity(const std::vector<double>& p_list,
                                                     const ProblemParams& params_base, double tol,
                                                     const EquilibriumOptions& options = {});

}  // namespace plap
