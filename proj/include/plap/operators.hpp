// Discrete p-Laplacian, its energy functionals and the affine forcing
// B(u) = lambda*u + g.
#pragma once

#include <span>

#include "plap/grid.hpp"

namespace plap {

/// Exponent p >= 2, linear coefficient lambda and forcing g on a mesh.
class ProblemParams {
public:
    ProblemParams(double p, double lambda, GridFunction g);

    double p() const noexcept { return p_; }
    double lambda() const noexcept { return lambda_; }
    const GridFunction& g() const noexcept { return g_; }
    const Mesh1D& mesh() const noexcept { return g_.mesh(); }

    ProblemParams with_p(double p) const { return ProblemParams(p, lambda_, g_); }
    ProblemParams with_lambda(double lambda) const { return ProblemParams(p_, lambda, g_); }

private:
    double p_;
    double lambda_;
    GridFunction g_;
};

/// -(1/h)(w_{i+1/2} - w_{i-1/2}) with face flux w = |Du|^{p-2} Du. A face
/// with Du = 0 carries zero flux.
GridFunction apply_Ap(const GridFunction& u, double p);

/// (1/p) * norm_V_p(u, p)^p.
double energy_Jp(const GridFunction& u, double p);

/// J_p(u) - (lambda/2)|u|^2 - <g, u>.
double energy_tilde_Ep(const GridFunction& u, const ProblemParams& params);

/// A_p(u) - lambda*u - g; vanishes at equilibria.
GridFunction grad_tilde_Ep(const GridFunction& u, const ProblemParams& params);

GridFunction rhs_B(const GridFunction& u, const ProblemParams& params);

namespace kernel {

/// |d|^{p-2} d, zero at d = 0.
double flux(double d, double p) noexcept;

/// out = A_p(u); faces is scratch of size n+1.
void apply_ap(std::span<const double> u, double h, double p, std::span<double> faces,
              std::span<double> out) noexcept;

/// Tridiagonal Jacobian of A_p at u: diag and off-diagonal (size n-1,
/// symmetric). Face weights (p-1)|Du|^{p-2}.
void jacobian_ap(std::span<const double> u, double h, double p, std::span<double> faces,
                 std::span<double> diag, std::span<double> off) noexcept;

/// (1/p) h sum |Du|^p.
double energy_jp(std::span<const double> u, double h, double p, std::span<double> faces) noexcept;

}  // namespace kernel

}  // namespace plap
