#include <cmath>
#include <random>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "doctest.h"
#include "kwplane/geometry.hpp"
#include "kwplane/quadrature.hpp"
#include "kwplane/schedule.hpp"

using namespace kw;

TEST_CASE("build_grid: R=1, n=5, square") {
    GridSpec g = build_grid(1.0, 5);
    CHECK(g.spacing() == doctest::Approx(0.5));
    CHECK(g.spacing() * (g.n() - 1) == doctest::Approx(2.0 * g.radius()).epsilon(1e-15));
    CHECK(g.num_interior() == 9);
}

TEST_CASE("build_grid: disk masks the corners") {
    GridSpec g = build_grid(1.0, 5, GridShape::disk);
    CHECK_FALSE(g.is_interior(0, 0));       // (-1,-1), |z| > 1
    CHECK_FALSE(g.is_interior(4, 4));
    CHECK(g.is_interior(2, 2));             // origin
    // interior 3x3 block has |z| <= sqrt(0.5) < 1, all kept
    CHECK(g.num_interior() == 9);

    GridSpec big(10.0, 41, GridShape::disk);
    // a node inside the square but outside the disk is boundary
    CHECK_FALSE(big.is_interior(1, 1)); // (-9.5, -9.5), |z| = 13.4 > 10
    CHECK(big.num_interior() < 39 * 39);
}

TEST_CASE("build_grid: R=20, n=401 has spacing 0.1") {
    GridSpec g = build_grid(20.0, 401);
    CHECK(g.spacing() == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("build_grid rejects bad parameters") {
    CHECK_THROWS_AS(build_grid(1.0, 6), InvalidInput);   // even
    CHECK_THROWS_AS(build_grid(1.0, 3), InvalidInput);   // too few
    CHECK_THROWS_AS(build_grid(0.0, 5), InvalidInput);
    CHECK_THROWS_AS(build_grid(-2.0, 5), InvalidInput);
}

TEST_CASE("quadrature: constants over the square") {
    GridSpec g(1.0, 51);
    ScalarField one(g, 1.0);
    CHECK(quadrature(one, PowerProfile{1.0, 0.0}, g) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("improper profile integrals over R^2") {
    // int (1+r^2)^-p dA = pi/(p-1)
    RadialIntegral i2 = integrate_profile_r2(PowerProfile{1.0, -2.0});
    CHECK(i2.convergent);
    CHECK(i2.value == doctest::Approx(M_PI).epsilon(1e-9));

    RadialIntegral i32 = integrate_profile_r2(PowerProfile{1.0, -1.5});
    CHECK(i32.convergent);
    CHECK(i32.value == doctest::Approx(2.0 * M_PI).epsilon(1e-9));

    // beta >= -1 diverges and is reported as such
    CHECK_FALSE(integrate_profile_r2(PowerProfile{1.0, -1.0}).convergent);
    CHECK_FALSE(integrate_profile_r2(PowerProfile{1.0, -0.5}).convergent);
    CHECK_FALSE(integrate_profile_r2(PowerProfile{2.0, 0.3}).convergent);

    // generic radial integrator agrees on a smooth convergent case
    RadialIntegral gen = integrate_radial_r2([](double r) { return std::pow(1.0 + r * r, -2.0); });
    CHECK(gen.convergent);
    CHECK(gen.value == doctest::Approx(M_PI).epsilon(1e-8));
    CHECK_FALSE(integrate_radial_r2([](double r) { return 1.0 / (1.0 + r); }).convergent);
}

TEST_CASE("dirichlet_laplacian_apply: zero field and unit spike") {
    GridSpec g(1.0, 9);
    ScalarField zero(g);
    CHECK(dirichlet_laplacian_apply(zero, g).sup_norm() == 0.0);

    ScalarField spike(g);
    spike(4, 4) = 1.0;
    ScalarField out = dirichlet_laplacian_apply(spike, g);
    double h2 = g.spacing() * g.spacing();
    CHECK(out(4, 4) == doctest::Approx(-4.0 / h2));
    CHECK(out(3, 4) == doctest::Approx(1.0 / h2));
    CHECK(out(5, 4) == doctest::Approx(1.0 / h2));
    CHECK(out(4, 3) == doctest::Approx(1.0 / h2));
    CHECK(out(4, 5) == doctest::Approx(1.0 / h2));
    CHECK(out(0, 0) == 0.0);
}

TEST_CASE("dirichlet_laplacian_apply: product-sine eigenfunction") {
    // u = sin(pi(x+R)/2R) sin(pi(y+R)/2R) vanishes on the boundary and
    // Delta u = -2 (pi/2R)^2 u
    const double R = 1.0;
    double prev_err = 0.0;
    for (int n : {41, 81}) {
        GridSpec g(R, n);
        ScalarField u = ScalarField::sample(g, [R](double x, double y) {
            return std::sin(M_PI * (x + R) / (2 * R)) * std::sin(M_PI * (y + R) / (2 * R));
        });
        ScalarField lap = dirichlet_laplacian_apply(u, g);
        double lam = -2.0 * std::pow(M_PI / (2 * R), 2);
        double err = 0.0;
        for (int idx : g.interior_nodes()) err = std::max(err, std::abs(lap.at(idx) - lam * u.at(idx)));
        CHECK(err < 0.01);
        if (prev_err > 0.0) CHECK(err < prev_err / 3.0); // ~4x per refinement
        prev_err = err;
    }
}

TEST_CASE("discrete maximum principle on random right-hand sides") {
    // Delta_h u >= 0 interior, u = 0 boundary  =>  u <= 0 everywhere
    GridSpec g(1.0, 21);
    const auto& nodes = g.interior_nodes();
    const int m = static_cast<int>(nodes.size());
    const double h2 = g.spacing() * g.spacing();
    std::vector<Eigen::Triplet<double>> trip;
    for (int row = 0; row < m; ++row) {
        int idx = nodes[row];
        int i = idx % g.n(), j = idx / g.n();
        trip.emplace_back(row, row, 4.0 / h2);
        for (auto [di, dj] : {std::pair{-1, 0}, {1, 0}, {0, -1}, {0, 1}}) {
            int col = g.interior_rank(g.index(i + di, j + dj));
            if (col >= 0) trip.emplace_back(row, col, -1.0 / h2);
        }
    }
    Eigen::SparseMatrix<double> A(m, m); // -Delta_h
    A.setFromTriplets(trip.begin(), trip.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> chol(A);

    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        Eigen::VectorXd rhs(m); // Delta_h u = g >= 0  =>  -Delta_h u = -g
        for (int r = 0; r < m; ++r) rhs[r] = -unif(rng);
        Eigen::VectorXd u = chol.solve(rhs);
        CHECK(u.maxCoeff() <= 1e-12);
    }
}

TEST_CASE("Schedule validation") {
    Schedule s;
    CHECK_NOTHROW(s.validate());
    CHECK_NOTHROW(Schedule::family_defaults().validate());

    Schedule bad = s;
    bad.radii = {10.0, 5.0};
    CHECK_THROWS_AS(bad.validate(), InvalidInput);
    bad = s;
    bad.epsilons = {0.5, 0.5};
    CHECK_THROWS_AS(bad.validate(), InvalidInput);
    bad = s;
    bad.n = 100;
    CHECK_THROWS_AS(bad.validate(), InvalidInput);
}
