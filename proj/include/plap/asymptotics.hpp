// Behaviour at infinity and attractor comparison: normalised states, the
// Poincare compactification onto the hemisphere |v|^2 + s^2 = 1, s >= 0,
// detection of the eigendirection an unbounded linear orbit aligns with,
// Hausdorff semi-distances and forward-time attractor samples for p > 2.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "plap/evolution.hpp"
#include "plap/spectral.hpp"

namespace plap {

struct PoincarePoint {
    GridFunction v;
    double s;
};

/// u / norm_l2(u); DomainError on a zero state.
GridFunction normalized_state(const GridFunction& u);

/// (u, 1) / sqrt(norm_l2(u)^2 + 1): a point on the upper hemisphere, the
/// north pole for u = 0 and approaching the equator as |u| grows.
PoincarePoint poincare_project(const GridFunction& u);

struct EquatorLimitOptions {
    /// Unbounded once norm_l2 exceeds growth_factor * max(norm_l2(u(0)), 1).
    double growth_factor = 1e3;
    /// Mode k is the first whose |<u(T), phi_k>| / |u(T)| exceeds this.
    double dominance_fraction = 0.5;
    std::size_t min_samples_past_threshold = 10;
};

struct EquatorLimit {
    std::size_t k;    ///< 1-based mode index
    double residual;  ///< min over signs of norm_l2(u(T)/|u(T)| -+ phi_k)
};

/// nullopt when the orbit stays bounded over the sampled horizon. Throws
/// DomainError when fewer than min_samples_past_threshold samples lie past
/// the divergence threshold.
std::optional<EquatorLimit> detect_equator_limit(const Trajectory& traj, const SpectralBasis& basis,
                                                 const EquatorLimitOptions& options = {});

/// sup_{a in A} inf_{b in B} norm_l2(a - b).
double hausdorff_semidist(const std::vector<GridFunction>& a, const std::vector<GridFunction>& b);

/// Distance to span{phi_1..phi_N(lambda)} united with {u2_star} (when
/// given). DomainError if N(lambda) = 0 and no u2_star.
double dist_to_A2(const GridFunction& u, const SpectralBasis& basis, double lambda,
                  const std::optional<GridFunction>& u2_star);

struct AttractorSample {
    ProblemParams params;
    std::vector<GridFunction> states;
    double transient_time;
    double max_v_norm;  ///< max norm_V_p over states
};

/// {+-c phi_j : j <= 4, c in {0.5, 1, 2}} followed by random_count seeded
/// random states.
std::vector<GridFunction> default_ic_net(const SpectralBasis& basis, std::uint64_t seed, std::size_t random_count = 8);

/// Evolves each initial condition to transient_time (cfg.t_final is
/// ignored) and keeps the final states in input order. Requires p > 2.
AttractorSample sample_attractor_p(const ProblemParams& params, const std::vector<GridFunction>& ic_net,
                                   double transient_time, const SolverConfig& cfg, unsigned workers = 1);

struct SemicontinuityEntry {
    double p;
    double distance;
    AttractorSample sample;
};

/// For each p, sup over the attractor sample of the distance to the p = 2
/// attractor: to {u_2*} when lambda < lambda_1, else to the span of the
/// first N(lambda) modes united with u_2* (when non-resonant).
std::vector<SemicontinuityEntry> upper_semicontinuity_experiment(const std::vector<double>& p_list,
                                                                 const ProblemParams& params_base,
                                                                 const std::vector<GridFunction>& ic_net,
                                                                 double transient_time, const SolverConfig& cfg,
                                                                 unsigned workers = 1);

}  // namespace plap
