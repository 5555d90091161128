// Inequality oracles: Tartar's monotonicity estimate for the flux map,
// Ghidaglia's algebraic decay envelope, and the exponential/modal envelopes
// of the linear problem.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace plap {

struct TartarSample {
    std::vector<double> xi;
    std::vector<double> eta;
    double p;
};

struct TartarGap {
    double lhs;  ///< 2^{2-p} |xi - eta|^p
    double rhs;  ///< (|xi|^{p-2} xi - |eta|^{p-2} eta) . (xi - eta)
};

TartarGap tartar_gap(const TartarSample& sample);

/// rhs - lhs >= -1e-12 max(1, rhs).
bool tartar_holds(const TartarGap& gap) noexcept;

struct GhidagliaParams {
    double gamma;
    double delta;
    double p;
};

/// (delta/gamma)^{2/p} + (gamma (p-2) t / 2)^{-2/(p-2)}; requires t > 0.
double ghidaglia_envelope(double t, const GhidagliaParams& params);

/// Natural logarithm of the envelope, finite where the envelope overflows.
double log_ghidaglia_envelope(double t, const GhidagliaParams& params);

/// Log of the solution of y' = -gamma y^{p/2} + delta with y(0+) = +inf,
/// the largest solution of the differential inequality, at ascending times.
/// Integrated by RK4 in z = y^{-(p-2)/2}, which starts at z(0) = 0.
std::vector<double> log_ghidaglia_worst_case(const GhidagliaParams& params, const std::vector<double>& times);

/// initial_gap * e^{rate t}; rate 2 lambda for the squared p > 2 gap,
/// lambda - lambda_1 for the linear norm gap.
double exp_decay_envelope(double t, double rate, double initial_gap);

/// Square of the single-mode Duhamel coefficient (resonant branch
/// (u0_hat + t g_hat)^2 when lambda = lambda_j).
double growth_lower_bound(double t, double u0_hat, double g_hat, double lambda, double lambda_j);

using TartarChecker = std::function<TartarGap(const TartarSample&)>;

struct TartarFuzzReport {
    std::size_t count = 0;
    std::size_t violations = 0;
    double min_gap = 0.0;  ///< min over samples of rhs - lhs
    std::optional<TartarSample> first_violation;
    std::optional<TartarGap> first_violation_gap;
};

/// Seeded samples with d in {1,2,3}, p in [2,8], components in [-10,10].
/// The checker defaults to tartar_gap; tests substitute faulty constants.
TartarFuzzReport tartar_fuzz(std::uint64_t seed, std::size_t count, const TartarChecker& checker = tartar_gap);

struct GhidagliaFuzzReport {
    std::size_t count = 0;
    std::size_t violations = 0;
    double max_rel_excess = 0.0;  ///< max of y/envelope - 1 over all samples
    std::optional<GhidagliaParams> first_violation;
    double first_violation_t = 0.0;
};

/// Seeded (gamma, delta, p) with gamma in [0.1, 10], delta in [0, 10] and
/// p in [2.1, 8]; the worst-case ODE is compared against the envelope at 40
/// log-spaced times in [0.01, 10] with relative slack 1e-9.
GhidagliaFuzzReport ghidaglia_fuzz(std::uint64_t seed, std::size_t count);

}  // namespace plap
