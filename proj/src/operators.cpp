#include "plap/operators.hpp"

#include <cmath>
#include <vector>

namespace plap {

namespace {

void require_p(double p, const char* where) {
    if (!(p >= 2.0) || !std::isfinite(p)) throw DomainError(std::string(where) + ": exponent p must be >= 2");
}

}  // namespace

ProblemParams::ProblemParams(double p, double lambda, GridFunction g) : p_(p), lambda_(lambda), g_(std::move(g)) {
    require_p(p, "ProblemParams");
    if (!std::isfinite(lambda)) throw DomainError("ProblemParams: lambda must be finite");
}

namespace kernel {

double flux(double d, double p) noexcept {
    if (p == 2.0) return d;
    if (d == 0.0) return 0.0;
    return std::pow(std::abs(d), p - 2.0) * d;
}

void apply_ap(std::span<const double> u, double h, double p, std::span<double> faces,
              std::span<double> out) noexcept {
    const std::size_t n = u.size();
    gradient(u, h, faces);
    for (double& w : faces) w = flux(w, p);
    for (std::size_t i = 0; i < n; ++i) out[i] = -(faces[i + 1] - faces[i]) / h;
}

void jacobian_ap(std::span<const double> u, double h, double p, std::span<double> faces,
                 std::span<double> diag, std::span<double> off) noexcept {
    const std::size_t n = u.size();
    gradient(u, h, faces);
    for (double& a : faces) {
        if (p == 2.0) {
            a = 1.0;
        } else {
            a = a == 0.0 ? 0.0 : (p - 1.0) * std::pow(std::abs(a), p - 2.0);
        }
    }
    const double inv_h2 = 1.0 / (h * h);
    for (std::size_t i = 0; i < n; ++i) diag[i] = (faces[i] + faces[i + 1]) * inv_h2;
    for (std::size_t i = 0; i + 1 < n; ++i) off[i] = -faces[i + 1] * inv_h2;
}

double energy_jp(std::span<const double> u, double h, double p, std::span<double> faces) noexcept {
    gradient(u, h, faces);
    return h * sum_abs_pow(faces, p) / p;
}

}  // namespace kernel

GridFunction apply_Ap(const GridFunction& u, double p) {
    require_p(p, "apply_Ap");
    std::vector<double> faces(u.size() + 1), out(u.size());
    kernel::apply_ap(u.values(), u.mesh().spacing(), p, faces, out);
    return GridFunction(u.mesh(), std::move(out));
}

double energy_Jp(const GridFunction& u, double p) {
    require_p(p, "energy_Jp");
    std::vector<double> faces(u.size() + 1);
    return kernel::energy_jp(u.values(), u.mesh().spacing(), p, faces);
}

double energy_tilde_Ep(const GridFunction& u, const ProblemParams& params) {
    require_same_mesh(u.mesh(), params.mesh(), "energy_tilde_Ep");
    const double nrm = norm_l2(u);
    return energy_Jp(u, params.p()) - 0.5 * params.lambda() * nrm * nrm - inner_l2(params.g(), u);
}

GridFunction grad_tilde_Ep(const GridFunction& u, const ProblemParams& params) {
    require_same_mesh(u.mesh(), params.mesh(), "grad_tilde_Ep");
    std::vector<double> faces(u.size() + 1), out(u.size());
    kernel::apply_ap(u.values(), u.mesh().spacing(), params.p(), faces, out);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= params.lambda() * u[i] + params.g()[i];
    return GridFunction(u.mesh(), std::move(out));
}

GridFunction rhs_B(const GridFunction& u, const ProblemParams& params) {
    require_same_mesh(u.mesh(), params.mesh(), "rhs_B");
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = params.lambda() * u[i] + params.g()[i];
    return GridFunction(u.mesh(), std::move(out));
}

}  // namespace plap
