#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "plap/operators.hpp"
#include "plap/random.hpp"
#include "plap/spectral.hpp"

using namespace plap;

namespace {

Eigen::MatrixXd dirichlet_laplacian(const Mesh1D& m) {
    const auto n = static_cast<Eigen::Index>(m.size());
    const double h2 = m.spacing() * m.spacing();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a(i, i) = 2.0 / h2;
        if (i > 0) a(i, i - 1) = -1.0 / h2;
        if (i + 1 < n) a(i, i + 1) = -1.0 / h2;
    }
    return a;
}

Eigen::VectorXd as_vec(const GridFunction& u) {
    return Eigen::Map<const Eigen::VectorXd>(u.values().data(), static_cast<Eigen::Index>(u.size()));
}

GridFunction add_scaled(const GridFunction& u, double s, const GridFunction& v) { return u + s * v; }

}  // namespace

TEST_CASE("problem params validation") {
    const Mesh1D m(1.0, 5);
    CHECK_THROWS_AS(ProblemParams(1.9, 0.0, GridFunction(m)), DomainError);
    CHECK_THROWS_AS(ProblemParams(3.0, NAN, GridFunction(m)), DomainError);
    const ProblemParams p(3.0, 1.0, GridFunction(m));
    CHECK(p.with_p(2.5).p() == 2.5);
    CHECK(p.with_lambda(-1.0).lambda() == -1.0);
}

TEST_CASE("apply_Ap") {
    const Mesh1D m(std::numbers::pi, 63);
    for (double p : {2.0, 3.0}) {
        const auto zero = apply_Ap(GridFunction(m), p);
        for (double x : zero.values()) CHECK(x == 0.0);
    }

    const SpectralBasis basis(m);
    const auto& phi = basis.eigenvector(1);
    const auto r = apply_Ap(phi, 2.0) - basis.eigenvalue(1) * phi;
    CHECK(norm_l2(r) < 1e-10 * basis.eigenvalue(1));

    const auto u = random_grid_function(m, 4);
    const Eigen::VectorXd dense = dirichlet_laplacian(m) * as_vec(u);
    const auto a2 = apply_Ap(u, 2.0);
    for (std::size_t i = 0; i < m.size(); ++i) CHECK(a2[i] == doctest::Approx(dense(static_cast<Eigen::Index>(i))));
}

TEST_CASE("summation by parts: <A_p v, v> = |v|_V^p") {
    Rng rng(11);
    const Mesh1D m(std::numbers::pi, 63);
    for (int k = 0; k < 200; ++k) {
        const double p = rng.uniform(2.0, 6.0);
        const auto v = random_grid_function(m, rng.next(), rng.uniform(0.01, 10.0));
        const double lhs = inner_l2(apply_Ap(v, p), v);
        const double rhs = std::pow(norm_V_p(v, p), p);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * rhs);
    }
}

TEST_CASE("energy_Jp") {
    const Mesh1D m(std::numbers::pi, 31);
    CHECK(energy_Jp(GridFunction(m), 3.0) == 0.0);
    const auto u = random_grid_function(m, 8);
    for (double p : {2.0, 2.5, 4.0}) {
        for (double c : {0.5, 3.0}) {
            CHECK(energy_Jp(c * u, p) == doctest::Approx(std::pow(c, p) * energy_Jp(u, p)).epsilon(1e-12));
        }
    }
}

TEST_CASE("energy_Jp directional derivative matches apply_Ap") {
    Rng rng(21);
    const Mesh1D m(std::numbers::pi, 31);
    for (double p : {2.0, 2.5, 3.0, 4.0}) {
        for (int k = 0; k < 10; ++k) {
            const auto u = random_grid_function(m, rng.next());
            const auto d = random_grid_function(m, rng.next());
            const double eps = 1e-5;
            const double fd = (energy_Jp(add_scaled(u, eps, d), p) - energy_Jp(add_scaled(u, -eps, d), p)) / (2 * eps);
            const double an = inner_l2(apply_Ap(u, p), d);
            CHECK(std::abs(fd - an) <= 1e-6 * std::max(1.0, std::abs(an)));
        }
    }
}

TEST_CASE("energy_tilde_Ep") {
    const Mesh1D m(std::numbers::pi, 31);
    const auto g = random_grid_function(m, 2);
    const ProblemParams params(3.0, 1.5, g);
    CHECK(energy_tilde_Ep(GridFunction(m), params) == 0.0);
    const auto u = random_grid_function(m, 3);
    const ProblemParams plain(3.0, 0.0, GridFunction(m));
    CHECK(energy_tilde_Ep(u, plain) == doctest::Approx(energy_Jp(u, 3.0)).epsilon(1e-14));
}

TEST_CASE("grad_tilde_Ep against central differences") {
    Rng rng(31);
    const Mesh1D m(std::numbers::pi, 31);
    const double h = m.spacing();
    for (double p : {2.0, 2.5, 3.0, 4.0}) {
        const ProblemParams params(p, rng.uniform(-2.0, 3.0), random_grid_function(m, rng.next()));
        const auto u = random_grid_function(m, rng.next());
        const auto grad = grad_tilde_Ep(u, params);
        std::vector<double> fd(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::vector<double> e(m.size(), 0.0);
            e[i] = 1.0;
            const GridFunction ei(m, e);
            const double eps = 1e-5;
            // Ẽ_p derivative along e_i is h * grad_i under the weighted inner product
            fd[i] = (energy_tilde_Ep(u + eps * ei, params) - energy_tilde_Ep(u - eps * ei, params)) / (2 * eps * h);
        }
        const auto fd_fn = GridFunction(m, fd);
        CHECK(norm_l2(fd_fn - grad) <= 1e-6 * std::max(1.0, norm_l2(grad)));
    }
}

TEST_CASE("grad_tilde_Ep") {
    const Mesh1D m(std::numbers::pi, 31);
    const ProblemParams zero_g(3.0, 2.0, GridFunction(m));
    CHECK(norm_l2(grad_tilde_Ep(GridFunction(m), zero_g)) == 0.0);

    const auto g = random_grid_function(m, 5);
    const ProblemParams lin(2.0, 0.7, g);
    const auto u = random_grid_function(m, 6);
    const Eigen::MatrixXd a = dirichlet_laplacian(m) - 0.7 * Eigen::MatrixXd::Identity(31, 31);
    const Eigen::VectorXd expected = a * as_vec(u) - as_vec(g);
    const auto got = grad_tilde_Ep(u, lin);
    for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK(got[i] == doctest::Approx(expected(static_cast<Eigen::Index>(i))).epsilon(1e-12));
    }
}

TEST_CASE("rhs_B") {
    const Mesh1D m(1.0, 7);
    const auto g = random_grid_function(m, 1);
    const auto u = random_grid_function(m, 2);
    CHECK(rhs_B(GridFunction(m), ProblemParams(3.0, 2.0, g)) == g);
    CHECK(rhs_B(u, ProblemParams(3.0, 0.0, g)) == g);
    CHECK(rhs_B(u, ProblemParams(3.0, 1.0, GridFunction(m))) == u);
}

TEST_CASE("discrete monotonicity of A_p") {
    Rng rng(41);
    const Mesh1D m(std::numbers::pi, 31);
    for (int k = 0; k < 200; ++k) {
        const double p = rng.uniform(2.0, 6.0);
        const auto u = random_grid_function(m, rng.next(), 3.0);
        const auto v = random_grid_function(m, rng.next(), 3.0);
        const double lhs = inner_l2(apply_Ap(u, p) - apply_Ap(v, p), u - v);
        CHECK(lhs >= -1e-12 * std::max(1.0, std::abs(lhs)));
    }
}
