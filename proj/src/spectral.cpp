#include "plap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace plap {

SpectralBasis::SpectralBasis(const Mesh1D& mesh) : mesh_(mesh) {
    const std::size_t n = mesh.size();
    const double h = mesh.spacing();
    const double L = mesh.length();
    eigenvalues_.reserve(n);
    eigenvectors_.reserve(n);
    for (std::size_t j = 1; j <= n; ++j) {
        const double k = static_cast<double>(j) * std::numbers::pi / L;
        const double s = std::sin(0.5 * k * h);
        eigenvalues_.push_back(4.0 / (h * h) * s * s);
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = std::sin(k * mesh.node(i));
        double norm2 = 0.0;
        for (double x : v) norm2 += x * x;
        const double scale = 1.0 / std::sqrt(h * norm2);
        for (double& x : v) x *= scale;
        eigenvectors_.emplace_back(mesh, std::move(v));
    }
}

double SpectralBasis::eigenvalue(std::size_t j) const {
    if (j < 1 || j > size()) throw DomainError("SpectralBasis: mode index out of range");
    return eigenvalues_[j - 1];
}

const GridFunction& SpectralBasis::eigenvector(std::size_t j) const {
    if (j < 1 || j > size()) throw DomainError("SpectralBasis: mode index out of range");
    return eigenvectors_[j - 1];
}

std::vector<double> SpectralBasis::coefficients(const GridFunction& u) const {
    require_same_mesh(u.mesh(), mesh_, "SpectralBasis::coefficients");
    std::vector<double> c(size());
    for (std::size_t j = 0; j < size(); ++j) c[j] = inner_l2(u, eigenvectors_[j]);
    return c;
}

GridFunction SpectralBasis::synthesize(const std::vector<double>& coeffs) const {
    if (coeffs.size() != size()) throw DomainError("SpectralBasis::synthesize: wrong coefficient count");
    std::vector<double> v(mesh_.size(), 0.0);
    for (std::size_t j = 0; j < size(); ++j) {
        const auto phi = eigenvectors_[j].values();
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += coeffs[j] * phi[i];
    }
    return GridFunction(mesh_, std::move(v));
}

SpectralBasis laplacian_eigs(const Mesh1D& mesh) { return SpectralBasis(mesh); }

std::size_t count_N_lambda(double lambda, const SpectralBasis& basis) {
    const auto& ev = basis.eigenvalues();
    return static_cast<std::size_t>(std::upper_bound(ev.begin(), ev.end(), lambda) - ev.begin());
}

bool is_resonant(double lambda, double lambda_j) noexcept {
    return std::abs(lambda - lambda_j) < 1e-12 * std::max(1.0, std::abs(lambda));
}

double fourier_mode(double t, double u0_hat, double g_hat, double lambda, double lambda_j) {
    if (!(t >= 0.0)) throw DomainError("fourier_mode: t must be >= 0");
    if (is_resonant(lambda, lambda_j)) return u0_hat + t * g_hat;
    const double rate = lambda - lambda_j;
    return std::exp(rate * t) * u0_hat + std::expm1(rate * t) / rate * g_hat;
}

namespace {

void flush_roundoff(std::vector<double>& c) {
    double peak = 0.0;
    for (double x : c) peak = std::max(peak, std::abs(x));
    for (double& x : c) {
        if (std::abs(x) <= kCoefficientFloor * peak) x = 0.0;
    }
}

}  // namespace

Trajectory solve_p2_exact(const GridFunction& u0, const ProblemParams& params, const std::vector<double>& times) {
    return solve_p2_exact(u0, params, times, SpectralBasis(params.mesh()));
}

Trajectory solve_p2_exact(const GridFunction& u0, const ProblemParams& params, const std::vector<double>& times,
                          const SpectralBasis& basis) {
    if (params.p() != 2.0) throw DomainError("solve_p2_exact: requires p = 2");
    require_same_mesh(u0.mesh(), params.mesh(), "solve_p2_exact");
    require_same_mesh(basis.mesh(), params.mesh(), "solve_p2_exact");
    if (!times.empty() && !(times.front() >= 0.0)) throw DomainError("solve_p2_exact: times must be >= 0");
    auto u0_hat = basis.coefficients(u0);
    auto g_hat = basis.coefficients(params.g());
    flush_roundoff(u0_hat);
    flush_roundoff(g_hat);
    Trajectory traj(params);
    std::vector<double> c(basis.size());
    for (double t : times) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            c[j] = fourier_mode(t, u0_hat[j], g_hat[j], params.lambda(), basis.eigenvalues()[j]);
        }
        traj.append(t, basis.synthesize(c));
    }
    return traj;
}

std::vector<ModeBoundRecord> parseval_mode_bound(const Trajectory& traj, std::size_t j, const SpectralBasis& basis) {
    const GridFunction& phi = basis.eigenvector(j);
    std::vector<ModeBoundRecord> out;
    out.reserve(traj.size());
    for (const auto& s : traj.samples()) {
        out.push_back({s.t, std::abs(inner_l2(s.state, phi)), norm_l2(s.state)});
    }
    return out;
}

}  // namespace plap
