#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <numbers>

#include "plap/equilibria.hpp"
#include "plap/evolution.hpp"
#include "plap/random.hpp"
#include "plap/spectral.hpp"

using namespace plap;

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
               double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) return left + right + (left + right - whole) / 15.0;
    return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) + simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return simpson(f, a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, 50);
}

}  // namespace

TEST_CASE("eigenvalues match a dense eigensolver") {
    const Mesh1D m(1.0, 3);
    const double h2 = m.spacing() * m.spacing();
    Eigen::Matrix3d a;
    a << 2, -1, 0, -1, 2, -1, 0, -1, 2;
    a /= h2;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(a);
    const SpectralBasis basis = laplacian_eigs(m);
    for (int j = 0; j < 3; ++j) {
        CHECK(std::abs(basis.eigenvalue(j + 1) - es.eigenvalues()(j)) <= 1e-12 * es.eigenvalues()(j));
        const auto& phi = basis.eigenvector(j + 1);
        const Eigen::Vector3d v(phi[0], phi[1], phi[2]);
        CHECK((a * v - es.eigenvalues()(j) * v).norm() <= 1e-10 * es.eigenvalues()(j) * v.norm());
    }

    const Mesh1D big(std::numbers::pi, 63);
    const auto n = static_cast<Eigen::Index>(big.size());
    const double hb2 = big.spacing() * big.spacing();
    Eigen::MatrixXd ab = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        ab(i, i) = 2.0 / hb2;
        if (i > 0) ab(i, i - 1) = ab(i - 1, i) = -1.0 / hb2;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esb(ab);
    const SpectralBasis bb(big);
    for (Eigen::Index j = 0; j < n; ++j) {
        CHECK(std::abs(bb.eigenvalue(static_cast<std::size_t>(j) + 1) - esb.eigenvalues()(j)) <=
              1e-10 * esb.eigenvalues()(j));
    }
}

TEST_CASE("eigenvalues converge to the continuum") {
    const SpectralBasis basis(Mesh1D(std::numbers::pi, 1023));
    CHECK(std::abs(basis.eigenvalue(1) - 1.0) < 1e-5);
    CHECK(std::abs(basis.eigenvalue(2) - 4.0) < 1e-4);
}

TEST_CASE("eigenvectors are orthonormal") {
    const SpectralBasis basis(Mesh1D(2.0, 40));
    for (std::size_t i = 1; i <= basis.size(); ++i) {
        for (std::size_t j = i; j <= basis.size(); ++j) {
            const double ip = inner_l2(basis.eigenvector(i), basis.eigenvector(j));
            CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-10);
        }
    }
    CHECK(basis.eigenvector(1)[0] > 0.0);
    CHECK_THROWS(basis.eigenvalue(0));
    CHECK_THROWS(basis.eigenvalue(41));
}

TEST_CASE("coefficients and synthesize are inverse") {
    const SpectralBasis basis(Mesh1D(std::numbers::pi, 31));
    const auto u = random_grid_function(basis.mesh(), 3);
    CHECK(norm_l2(basis.synthesize(basis.coefficients(u)) - u) < 1e-12);
}

TEST_CASE("count_N_lambda") {
    const SpectralBasis basis(Mesh1D(std::numbers::pi, 63));
    CHECK(count_N_lambda(0.5 * basis.eigenvalue(1), basis) == 0);
    CHECK(count_N_lambda(basis.eigenvalue(1), basis) == 1);
    CHECK(count_N_lambda(basis.eigenvalue(2), basis) == 2);
    const SpectralBasis fine(Mesh1D(std::numbers::pi, 1023));
    CHECK(count_N_lambda(5.0, fine) == 2);
    CHECK(count_N_lambda(1e12, basis) == basis.size());
}

TEST_CASE("fourier_mode") {
    CHECK(fourier_mode(0.0, 0.7, 3.0, 2.0, 1.0) == 0.7);
    CHECK(fourier_mode(0.0, -1.5, 3.0, 1.0, 1.0) == -1.5);
    CHECK(fourier_mode(7.0, 0.0, 1.0, 2.5, 2.5) == 7.0);
    CHECK(is_resonant(2.5, 2.5));
    CHECK_FALSE(is_resonant(2.5, 2.6));
    CHECK_THROWS(fourier_mode(-1.0, 0.0, 1.0, 0.0, 1.0));

    struct Case {
        double t, u0, g, lambda, lj;
    };
    const Case cases[] = {{1.0, 0.3, 1.0, 0.5, 1.0},  {3.0, -1.0, 2.0, 0.0, 4.0}, {2.0, 0.5, -0.7, 1.5, 1.0},
                          {0.1, 2.0, 5.0, -3.0, 9.0}, {5.0, 0.0, 1.0, 1.0, 1.0 + 1e-9}};
    for (const auto& c : cases) {
        const double a = c.lambda - c.lj;
        const double integral = integrate([&](double s) { return std::exp(a * (c.t - s)) * c.g; }, 0.0, c.t, 1e-13);
        const double expected = std::exp(a * c.t) * c.u0 + integral;
        CHECK(std::abs(fourier_mode(c.t, c.u0, c.g, c.lambda, c.lj) - expected) <= 1e-8 * std::abs(expected));
    }
}

TEST_CASE("solve_p2_exact") {
    const Mesh1D m(std::numbers::pi, 63);
    const SpectralBasis basis(m);
    const std::vector<double> times{0.0, 0.5, 1.0, 2.0};

    const ProblemParams heat(2.0, 0.0, GridFunction(m));
    const auto decay = solve_p2_exact(basis.eigenvector(1), heat, times, basis);
    for (const auto& s : decay.samples()) {
        CHECK(norm_l2(s.state - std::exp(-basis.eigenvalue(1) * s.t) * basis.eigenvector(1)) < 1e-13);
    }

    const ProblemParams forced(2.0, 0.5, random_grid_function(m, 3));
    const auto eq = solve_equilibrium_2(forced);
    const auto fixed = solve_p2_exact(eq.state, forced, times, basis);
    for (const auto& s : fixed.samples()) {
        CHECK(norm_l2(s.state - eq.state) < 1e-10);
    }

    CHECK_THROWS_AS(solve_p2_exact(eq.state, forced.with_p(3.0), times), DomainError);
}

TEST_CASE("solve_p2_exact agrees with backward Euler") {
    const Mesh1D m(std::numbers::pi, 63);
    const SpectralBasis basis(m);
    const ProblemParams params(2.0, 0.4 * basis.eigenvalue(1), random_grid_function(m, 12));
    const auto u0 = random_grid_function(m, 13);
    SolverConfig cfg;
    cfg.tau = 1e-5;
    cfg.t_final = 0.1;
    cfg.record_every = 10000;
    const auto be = evolve(u0, params, cfg);
    const auto ex = solve_p2_exact(u0, params, {0.1}, basis);
    CHECK(norm_l2(be.back().state - ex.back().state) < 1e-4);
}

TEST_CASE("parseval_mode_bound") {
    const Mesh1D m(std::numbers::pi, 31);
    const SpectralBasis basis(m);
    std::vector<double> times;
    for (int k = 0; k <= 40; ++k) times.push_back(0.25 * k);

    const ProblemParams params(2.0, 0.3, random_grid_function(m, 4));
    const auto traj = solve_p2_exact(random_grid_function(m, 5), params, times, basis);
    for (std::size_t j : {1u, 2u, 7u, 31u}) {
        for (const auto& r : parseval_mode_bound(traj, j, basis)) CHECK(r.mode_abs <= r.norm + 1e-12);
    }

    const ProblemParams free(2.0, 0.0, GridFunction(m));
    const auto single = solve_p2_exact(basis.eigenvector(3), free, times, basis);
    for (const auto& r : parseval_mode_bound(single, 3, basis)) {
        CHECK(r.mode_abs == doctest::Approx(r.norm).epsilon(1e-12));
    }

    const double lambda = 0.5 * (basis.eigenvalue(2) + basis.eigenvalue(3));
    const ProblemParams grow(2.0, lambda, basis.eigenvector(2));
    const auto g_traj = solve_p2_exact(-2.0 * basis.eigenvector(2), grow, times, basis);
    const auto rec = parseval_mode_bound(g_traj, 2, basis);
    for (std::size_t i = rec.size() / 2; i + 1 < rec.size(); ++i) CHECK(rec[i + 1].mode_abs >= rec[i].mode_abs);
}
