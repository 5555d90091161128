#include "plap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plap/grid.hpp"
#include "plap/random.hpp"
#include "plap/spectral.hpp"

namespace plap {

namespace {

double euclid(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

void require_ghidaglia(const GhidagliaParams& g) {
    if (!(g.gamma > 0.0) || !(g.delta >= 0.0) || !(g.p > 2.0)) {
        throw DomainError("GhidagliaParams: need gamma > 0, delta >= 0, p > 2");
    }
}

}  // namespace

TartarGap tartar_gap(const TartarSample& s) {
    if (!(s.p >= 2.0)) throw DomainError("tartar_gap: p must be >= 2");
    if (s.xi.empty() || s.xi.size() != s.eta.size()) throw DomainError("tartar_gap: vectors must share dimension d >= 1");
    const double nx = euclid(s.xi);
    const double ne = euclid(s.eta);
    const double wx = nx == 0.0 ? 0.0 : std::pow(nx, s.p - 2.0);
    const double we = ne == 0.0 ? 0.0 : std::pow(ne, s.p - 2.0);
    double diff2 = 0.0, pairing = 0.0;
    for (std::size_t k = 0; k < s.xi.size(); ++k) {
        const double d = s.xi[k] - s.eta[k];
        diff2 += d * d;
        pairing += (wx * s.xi[k] - we * s.eta[k]) * d;
    }
    if (s.p == 2.0) return {diff2, pairing};
    return {std::pow(2.0, 2.0 - s.p) * std::pow(std::sqrt(diff2), s.p), pairing};
}

bool tartar_holds(const TartarGap& gap) noexcept {
    return gap.rhs - gap.lhs >= -1e-12 * std::max(1.0, gap.rhs);
}

double log_ghidaglia_envelope(double t, const GhidagliaParams& g) {
    if (!(t > 0.0)) throw DomainError("ghidaglia_envelope: t must be > 0");
    require_ghidaglia(g);
    const double log_decay = -2.0 / (g.p - 2.0) * std::log(g.gamma * (g.p - 2.0) * t / 2.0);
    if (g.delta == 0.0) return log_decay;
    const double log_floor = 2.0 / g.p * std::log(g.delta / g.gamma);
    const double hi = std::max(log_floor, log_decay);
    const double lo = std::min(log_floor, log_decay);
    return hi + std::log1p(std::exp(lo - hi));
}

double ghidaglia_envelope(double t, const GhidagliaParams& g) {
    if (!(t > 0.0)) throw DomainError("ghidaglia_envelope: t must be > 0");
    require_ghidaglia(g);
    const double floor = g.delta == 0.0 ? 0.0 : std::pow(g.delta / g.gamma, 2.0 / g.p);
    return floor + std::pow(g.gamma * (g.p - 2.0) * t / 2.0, -2.0 / (g.p - 2.0));
}

std::vector<double> log_ghidaglia_worst_case(const GhidagliaParams& g, const std::vector<double>& times) {
    require_ghidaglia(g);
    const double c = 0.5 * (g.p - 2.0);
    const double q = g.p / (g.p - 2.0);
    auto rhs = [&](double z) { return c * (g.gamma - g.delta * std::pow(std::max(z, 0.0), q)); };
    // Linearised decay rate at the attracting state bounds the stiffness.
    const double lip = 0.5 * g.p * std::pow(g.delta, 1.0 - 2.0 / g.p) * std::pow(g.gamma, 2.0 / g.p);
    const double dt_max = std::min(1e-3, lip > 0.0 ? 0.1 / lip : 1e-3);

    std::vector<double> out;
    out.reserve(times.size());
    double t = 0.0, z = 0.0;
    for (double target : times) {
        if (!(target > t)) throw DomainError("log_ghidaglia_worst_case: times must be > 0 and strictly ascending");
        while (t < target) {
            const double dt = std::min(dt_max, target - t);
            const double k1 = rhs(z);
            const double k2 = rhs(z + 0.5 * dt * k1);
            const double k3 = rhs(z + 0.5 * dt * k2);
            const double k4 = rhs(z + dt * k3);
            z += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            t = (target - t <= dt_max) ? target : t + dt;
        }
        out.push_back(-2.0 / (g.p - 2.0) * std::log(z));
    }
    return out;
}

double exp_decay_envelope(double t, double rate, double initial_gap) {
    if (!(t >= 0.0)) throw DomainError("exp_decay_envelope: t must be >= 0");
    return initial_gap * std::exp(rate * t);
}

double growth_lower_bound(double t, double u0_hat, double g_hat, double lambda, double lambda_j) {
    const double mode = fourier_mode(t, u0_hat, g_hat, lambda, lambda_j);
    return mode * mode;
}

TartarFuzzReport tartar_fuzz(std::uint64_t seed, std::size_t count, const TartarChecker& checker) {
    Rng rng(seed);
    TartarFuzzReport report;
    report.min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t d = 1 + rng.next() % 3;
        TartarSample s{std::vector<double>(d), std::vector<double>(d), rng.uniform(2.0, 8.0)};
        for (double& x : s.xi) x = rng.uniform(-10.0, 10.0);
        for (double& x : s.eta) x = rng.uniform(-10.0, 10.0);
        const TartarGap gap = checker(s);
        ++report.count;
        report.min_gap = std::min(report.min_gap, gap.rhs - gap.lhs);
        if (!tartar_holds(gap)) {
            if (report.violations++ == 0) {
                report.first_violation = s;
                report.first_violation_gap = gap;
            }
        }
    }
    return report;
}

GhidagliaFuzzReport ghidaglia_fuzz(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    std::vector<double> times(40);
    for (std::size_t k = 0; k < times.size(); ++k) {
        times[k] = 0.01 * std::pow(1000.0, static_cast<double>(k) / static_cast<double>(times.size() - 1));
    }
    times.back() = 10.0;
    GhidagliaFuzzReport report;
    report.max_rel_excess = -std::numeric_limits<double>::infinity();
    const double slack = std::log1p(1e-9);
    for (std::size_t i = 0; i < count; ++i) {
        const GhidagliaParams g{rng.uniform(0.1, 10.0), rng.uniform(0.0, 10.0), rng.uniform(2.1, 8.0)};
        const auto log_y = log_ghidaglia_worst_case(g, times);
        ++report.count;
        bool violated = false;
        for (std::size_t k = 0; k < times.size(); ++k) {
            const double excess = log_y[k] - log_ghidaglia_envelope(times[k], g);
            report.max_rel_excess = std::max(report.max_rel_excess, std::expm1(excess));
            if (excess > slack && !violated) {
                violated = true;
                if (report.violations == 0) {
                    report.first_violation = g;
                    report.first_violation_t = times[k];
                }
                ++report.violations;
            }
        }
    }
    return report;
}

}  // namespace plap
