// Closed-form eigenpairs of the discrete Dirichlet Laplacian and the exact
// modal solution of the linear (p = 2) problem.
#pragma once

#include <cstddef>
#include <vector>

#include "plap/trajectory.hpp"

namespace plap {

/// All n eigenpairs of the three-point Dirichlet Laplacian on a mesh,
/// eigenvalues ascending, eigenvectors orthonormal under inner_l2 and
/// positive at the first interior node.
class SpectralBasis {
public:
    explicit SpectralBasis(const Mesh1D& mesh);

    const Mesh1D& mesh() const noexcept { return mesh_; }
    std::size_t size() const noexcept { return eigenvalues_.size(); }

    /// 1-based mode index, as in lambda_1 < lambda_2 < ...
    double eigenvalue(std::size_t j) const;
    const GridFunction& eigenvector(std::size_t j) const;
    const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }

    /// Coefficients <u, phi_j>, j = 1..n (stored 0-based).
    std::vector<double> coefficients(const GridFunction& u) const;
    /// sum_j c_j phi_j.
    GridFunction synthesize(const std::vector<double>& coeffs) const;

private:
    Mesh1D mesh_;
    std::vector<double> eigenvalues_;
    std::vector<GridFunction> eigenvectors_;
};

SpectralBasis laplacian_eigs(const Mesh1D& mesh);

/// Number of eigenvalues <= lambda.
std::size_t count_N_lambda(double lambda, const SpectralBasis& basis);

/// True when |lambda - lambda_j| < 1e-12 max(1, |lambda|); the modal
/// formulas switch to their resonant branch there.
bool is_resonant(double lambda, double lambda_j) noexcept;

inline constexpr double kCoefficientFloor = 64.0 * 2.220446049250313e-16;

/// Duhamel solution of du/dt = (lambda - lambda_j) u + g_hat, u(0) = u0_hat.
double fourier_mode(double t, double u0_hat, double g_hat, double lambda, double lambda_j);

/// Exact solution of the spatially discrete linear problem sampled at the
/// given ascending times. Requires params.p() == 2. Coefficients of u0 and g
/// below kCoefficientFloor times their largest coefficient are treated as 0,
/// so a mode absent from the data stays absent under exponential growth.
Trajectory solve_p2_exact(const GridFunction& u0, const ProblemParams& params, const std::vector<double>& times);
Trajectory solve_p2_exact(const GridFunction& u0, const ProblemParams& params, const std::vector<double>& times,
                          const SpectralBasis& basis);

struct ModeBoundRecord {
    double t;
    double mode_abs;  ///< |<u(t), phi_j>|
    double norm;      ///< norm_l2(u(t))
};

/// Per-sample single-mode lower bound on the norm; j is 1-based.
std::vector<ModeBoundRecord> parseval_mode_bound(const Trajectory& traj, std::size_t j, const SpectralBasis& basis);

}  // namespace plap
