#include <doctest.h>

#include <cmath>
#include <numbers>

#include "plap/grid.hpp"
#include "plap/random.hpp"
#include "plap/spectral.hpp"

using namespace plap;

TEST_CASE("mesh construction") {
    const Mesh1D m(1.0, 3);
    CHECK(m.spacing() == doctest::Approx(0.25));
    CHECK(m.node(0) == doctest::Approx(0.25));
    CHECK(m.node(2) == doctest::Approx(0.75));
    CHECK_THROWS_AS(Mesh1D(1.0, 2), DomainError);
    CHECK_THROWS_AS(Mesh1D(0.0, 8), DomainError);
    CHECK_THROWS_AS(Mesh1D(std::nan(""), 8), DomainError);
}

TEST_CASE("grid function validation") {
    const Mesh1D m(1.0, 3);
    CHECK_THROWS_AS(GridFunction(m, {1.0, 2.0}), DomainError);
    CHECK_THROWS_AS(GridFunction(m, {1.0, INFINITY, 0.0}), DomainError);
    const GridFunction a(m, {1.0, 2.0, 3.0});
    const GridFunction b(Mesh1D(2.0, 3), {1.0, 2.0, 3.0});
    CHECK_THROWS_AS(a + b, MeshMismatch);
    CHECK_THROWS_AS(inner_l2(a, b), MeshMismatch);
}

TEST_CASE("inner_l2") {
    const Mesh1D m(1.0, 3);
    const GridFunction zero(m);
    CHECK(inner_l2(zero, zero) == 0.0);
    const GridFunction one(m, {1.0, 1.0, 1.0});
    CHECK(inner_l2(one, one) == doctest::Approx(0.75).epsilon(1e-15));

    const Mesh1D big(2.0, 40);
    const auto u = random_grid_function(big, 1);
    const auto v = random_grid_function(big, 2);
    CHECK(inner_l2(u, v) == doctest::Approx(inner_l2(v, u)).epsilon(1e-15));
}

TEST_CASE("norm_l2") {
    const Mesh1D m(std::numbers::pi, 31);
    CHECK(norm_l2(GridFunction(m)) == 0.0);
    const SpectralBasis basis(m);
    CHECK(norm_l2(basis.eigenvector(1)) == doctest::Approx(1.0).epsilon(1e-14));
    const auto u = random_grid_function(m, 5);
    for (double c : {-3.0, 0.5, 7.0}) CHECK(norm_l2(c * u) == doctest::Approx(std::abs(c) * norm_l2(u)).epsilon(1e-14));
}

TEST_CASE("discrete_gradient") {
    const Mesh1D m(1.0, 5);
    const double h = m.spacing();
    const auto zero = discrete_gradient(GridFunction(m));
    REQUIRE(zero.size() == 6);
    for (std::size_t k = 0; k < zero.size(); ++k) CHECK(zero[k] == 0.0);

    for (std::size_t i = 0; i < 5; ++i) {
        std::vector<double> v(5, 0.0);
        v[i] = 1.0;
        const auto d = discrete_gradient(GridFunction(m, v));
        for (std::size_t k = 0; k < d.size(); ++k) {
            const double expected = k == i ? 1.0 / h : (k == i + 1 ? -1.0 / h : 0.0);
            CHECK(d[k] == doctest::Approx(expected).epsilon(1e-15));
        }
    }

    const Mesh1D m3(1.0, 3);
    const auto lin = GridFunction::from_function(m3, [](double x) { return x; });
    const auto d = discrete_gradient(lin);
    CHECK(d[0] == doctest::Approx(1.0));
    CHECK(d[1] == doctest::Approx(1.0));
    CHECK(d[2] == doctest::Approx(1.0));
    CHECK(d[3] == doctest::Approx(-3.0));
}

TEST_CASE("norm_V_p") {
    const Mesh1D m(std::numbers::pi, 20);
    CHECK(norm_V_p(GridFunction(m), 3.0) == 0.0);
    CHECK_THROWS_AS(norm_V_p(GridFunction(m), 1.5), DomainError);

    const auto u = random_grid_function(m, 7);
    const auto d = discrete_gradient(u);
    double s = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k) s += d[k] * d[k] * m.spacing();
    CHECK(norm_V_p(u, 2.0) * norm_V_p(u, 2.0) == doctest::Approx(s).epsilon(1e-13));

    for (double p : {2.0, 2.5, 3.0, 6.0}) {
        for (double c : {0.1, 2.0, 13.0}) {
            CHECK(norm_V_p(c * u, p) == doctest::Approx(c * norm_V_p(u, p)).epsilon(1e-13));
        }
    }
}

TEST_CASE("random grid functions are seeded") {
    const Mesh1D m(1.0, 16);
    CHECK(random_grid_function(m, 9) == random_grid_function(m, 9));
    CHECK_FALSE(random_grid_function(m, 9) == random_grid_function(m, 10));
    const auto u = random_grid_function(m, 3, 2.0);
    for (double x : u.values()) CHECK(std::abs(x) <= 2.0);
}
