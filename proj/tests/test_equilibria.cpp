#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "plap/equilibria.hpp"
#include "plap/random.hpp"
#include "plap/spectral.hpp"

using namespace plap;

TEST_CASE("solve_equilibrium_2") {
    const Mesh1D m(std::numbers::pi, 63);
    const SpectralBasis basis(m);
    const double l1 = basis.eigenvalue(1);

    const auto zero = solve_equilibrium_2(ProblemParams(2.0, 0.5 * l1, GridFunction(m)));
    CHECK(norm_l2(zero.state) == 0.0);

    const auto single = solve_equilibrium_2(ProblemParams(2.0, 0.0, basis.eigenvector(1)));
    CHECK(norm_l2(single.state - basis.eigenvector(1) / l1) < 1e-12);

    CHECK_THROWS_AS(solve_equilibrium_2(ProblemParams(2.0, l1, basis.eigenvector(1))), ResonanceError);

    const double lambda = 0.5 * (basis.eigenvalue(1) + basis.eigenvalue(2));
    const auto g = random_grid_function(m, 3);
    const auto eq = solve_equilibrium_2(ProblemParams(2.0, lambda, g));
    const auto n = static_cast<Eigen::Index>(m.size());
    const double h2 = m.spacing() * m.spacing();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a(i, i) = 2.0 / h2 - lambda;
        if (i > 0) a(i, i - 1) = a(i - 1, i) = -1.0 / h2;
    }
    const Eigen::VectorXd x = a.partialPivLu().solve(Eigen::Map<const Eigen::VectorXd>(g.values().data(), n));
    for (Eigen::Index i = 0; i < n; ++i) CHECK(eq.state[static_cast<std::size_t>(i)] == doctest::Approx(x(i)).epsilon(1e-10));
}

TEST_CASE("solve_equilibrium_p") {
    const Mesh1D m(std::numbers::pi, 63);
    const double tol = 1e-10;

    const auto zero = solve_equilibrium_p(ProblemParams(3.0, -1.0, GridFunction(m)), random_grid_function(m, 1), tol);
    CHECK(norm_l2(zero.state) < 1e-8);

    for (double p : {2.25, 3.0, 4.0}) {
        for (double lambda : {-2.0, 0.0}) {
            const ProblemParams params(p, lambda, random_grid_function(m, 7, 5.0));
            const auto a = solve_equilibrium_p(params, random_grid_function(m, 11, 3.0), tol);
            const auto b = solve_equilibrium_p(params, random_grid_function(m, 12, 0.1), tol);
            CHECK(a.residual <= tol);
            CHECK(norm_l2(grad_tilde_Ep(a.state, params)) <= tol);
            const auto direct = apply_Ap(a.state, p) - lambda * a.state - params.g();
            CHECK(norm_l2(direct) <= tol);
            CHECK(norm_l2(a.state - b.state) < 1e-8);
        }
    }

    const SpectralBasis basis(m);
    const ProblemParams above(3.0, 0.5 * (basis.eigenvalue(1) + basis.eigenvalue(2)), basis.eigenvector(1));
    const auto r = solve_equilibrium_p(above, GridFunction(m), tol);
    CHECK(r.residual <= tol);
    CHECK(norm_l2(r.state) > 0.0);

    CHECK_THROWS_AS(solve_equilibrium_p(above.with_p(2.0), GridFunction(m), tol), DomainError);
}

TEST_CASE("sweep_equilibrium_continuity") {
    const Mesh1D m(std::numbers::pi, 63);
    const SpectralBasis basis(m);
    const std::vector<double> p_list{2.5, 2.25, 2.125, 2.0625};

    for (const auto& e : sweep_equilibrium_continuity(p_list, ProblemParams(2.0, -1.0, GridFunction(m)), 1e-10)) {
        CHECK(e.gap_v2 < 1e-8);
        CHECK(e.gap_vp < 1e-8);
    }

    const auto sweep = sweep_equilibrium_continuity(p_list, ProblemParams(2.0, 0.0, basis.eigenvector(1)), 1e-10);
    REQUIRE(sweep.size() == 4);
    for (std::size_t i = 1; i < sweep.size(); ++i) CHECK(sweep[i].gap_v2 < sweep[i - 1].gap_v2);
    CHECK(sweep.back().gap_v2 < sweep.front().gap_v2 / 4.0);
    for (const auto& e : sweep) CHECK(e.residual <= 1e-10);

    const ProblemParams base(2.0, 0.0, basis.eigenvector(1));
    CHECK_THROWS_AS(sweep_equilibrium_continuity({2.25, 2.5}, base, 1e-10), DomainError);
    CHECK_THROWS_AS(sweep_equilibrium_continuity({2.5, 2.0}, base, 1e-10), DomainError);
    CHECK_THROWS_AS(sweep_equilibrium_continuity({2.5}, base.with_lambda(2.0), 1e-10), DomainError);
}
