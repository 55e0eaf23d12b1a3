#include <cmath>

#include "doctest.h"
#include "kwplane/geometry.hpp"
#include "kwplane/quadrature.hpp"

using namespace kw;

namespace {

// independent centered second differences on a fine stencil, used to
// cross-check the frozen analytic values
double fd_half_laplacian(const std::function<double(double, double)>& f, double x, double y,
                         double h = 1e-3) {
    double lap = (f(x + h, y) + f(x - h, y) + f(x, y + h) + f(x, y - h) - 4.0 * f(x, y)) / (h * h);
    return 0.5 * lap;
}

double sup_interior_diff(const ScalarField& a, const std::function<double(double, double)>& ref) {
    const GridSpec& g = a.grid();
    double sup = 0.0;
    for (int j = 0; j < g.n(); ++j)
        for (int i = 0; i < g.n(); ++i)
            if (g.is_interior(i, j))
                sup = std::max(sup, std::abs(a(i, j) - ref(g.x(i), g.y(j))));
    return sup;
}

} // namespace

TEST_CASE("half_laplacian of a constant vanishes") {
    GridSpec g(2.0, 21);
    ScalarField u(g, 3.7);
    ScalarField out = half_laplacian(u, BackgroundMetric::flat());
    for (int idx : g.interior_nodes()) CHECK(out.at(idx) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("half_laplacian of x^2+y^2 on g0 is exactly 2") {
    GridSpec g(2.0, 21);
    ScalarField u = ScalarField::sample(g, [](double x, double y) { return x * x + y * y; });
    ScalarField out = half_laplacian(u, BackgroundMetric::flat());
    // the 5-point stencil is exact on quadratics
    for (int idx : g.interior_nodes()) CHECK(out.at(idx) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("half_laplacian of log(1+|z|^2) matches 2(1+|z|^2)^-2") {
    auto f = [](double x, double y) { return std::log1p(x * x + y * y); };
    // cross-check the closed form against a fine independent stencil
    CHECK(fd_half_laplacian(f, 0.0, 0.0) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(fd_half_laplacian(f, 1.0, 0.5) == doctest::Approx(2.0 / std::pow(2.25, 2)).epsilon(1e-6));

    GridSpec g(2.0, 81);
    ScalarField u = ScalarField::sample(g, f);
    ScalarField out = half_laplacian(u, BackgroundMetric::flat());
    auto ref = [](double x, double y) {
        double s = 1.0 + x * x + y * y;
        return 2.0 / (s * s);
    };
    CHECK(sup_interior_diff(out, ref) < 5e-3); // O(h^2), h = 0.05
    CHECK(out(40, 40) == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("half_laplacian rejects mismatched grids") {
    GridSpec g1(2.0, 21), g2(2.0, 41);
    ScalarField u(g1, 1.0);
    BackgroundMetric bg{ScalarField(g2, 1.0)};
    CHECK_THROWS_AS(half_laplacian(u, bg), InvalidInput);
}

TEST_CASE("chern curvature of the flat metric vanishes") {
    GridSpec g(2.0, 21);
    ScalarField s = chern_scalar_curvature(BackgroundMetric::flat(), g);
    CHECK(s.sup_norm() == doctest::Approx(0.0));
}

TEST_CASE("chern curvature of g_k: closed form -2k(1+|z|^2)^-(k+2)") {
    for (double k : {0.5, 1.0, 1.9}) {
        BackgroundMetric gk = BackgroundMetric::gk(k);
        // at z = 0: k phi^k Delta log phi = -4k, so S = -2k
        CHECK(chern_scalar_curvature_at(gk, 0.0, 0.0) == doctest::Approx(-2.0 * k).epsilon(1e-14));
    }
    // k = 1 at |z| = 1: -2 * 2^-3 = -0.25
    CHECK(chern_scalar_curvature_at(BackgroundMetric::gk(1.0), 1.0, 0.0)
          == doctest::Approx(-0.25).epsilon(1e-14));
    // sampled-factor stencil path agrees with the closed form to O(h^2)
    GridSpec g(2.0, 81);
    ScalarField rho = ScalarField::sample(g, [](double x, double y) { return 1.0 + x * x + y * y; });
    ScalarField s = chern_scalar_curvature(BackgroundMetric(rho), g);
    auto ref = [](double x, double y) { return -2.0 * std::pow(1.0 + x * x + y * y, -3.0); };
    CHECK(sup_interior_diff(s, ref) < 5e-3);
}

TEST_CASE("chern curvature rejects non-positive conformal factors") {
    GridSpec g(1.0, 5);
    ScalarField rho(g, 1.0);
    rho(2, 2) = 0.0;
    CHECK_THROWS_AS((void)BackgroundMetric(rho), InvalidInput);
    CHECK_THROWS_AS((void)BackgroundMetric(PowerProfile(-1.0, 0.0)), InvalidInput);
}

TEST_CASE("conformal change: u = 0 is the identity") {
    GridSpec g(2.0, 21);
    BackgroundMetric gk = BackgroundMetric::gk(1.5);
    ScalarField u(g, 0.0);
    ScalarField s = conformal_change_curvature(u, gk);
    ScalarField ref = chern_scalar_curvature(gk, g);
    for (int idx = 0; idx < s.size(); ++idx)
        CHECK(s.at(idx) == doctest::Approx(ref.at(idx)).epsilon(1e-14));
}

TEST_CASE("conformal change: constant shift rescales by e^-c") {
    GridSpec g(2.0, 21);
    BackgroundMetric gk = BackgroundMetric::gk(1.0);
    ScalarField u(g, 0.7);
    ScalarField s = conformal_change_curvature(u, gk);
    for (int idx : g.interior_nodes()) {
        int i = idx % g.n(), j = idx / g.n();
        double ref = std::exp(-0.7) * chern_scalar_curvature_at(gk, g.x(i), g.y(j));
        CHECK(s.at(idx) == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("the two curvature routes agree: e^{k log(1+|z|^2)} g0 vs g_k") {
    // order test as well: halving h should quarter the error
    for (double k : {0.5, 1.0, 1.9}) {
        double prev_err = 0.0;
        for (int n : {41, 81}) {
            GridSpec g(2.0, n);
            ScalarField u = ScalarField::sample(
                g, [k](double x, double y) { return k * std::log1p(x * x + y * y); });
            ScalarField s = conformal_change_curvature(u, BackgroundMetric::flat());
            auto ref = [k](double x, double y) {
                return chern_scalar_curvature_at(BackgroundMetric::gk(k), x, y);
            };
            double err = sup_interior_diff(s, ref);
            if (prev_err > 0.0) CHECK(err < prev_err / 3.0);
            prev_err = err;
            CHECK(err < 0.05);
        }
    }
}

TEST_CASE("curvature of g_k integrated against its volume stays negative (k > 0)") {
    // int_{B_R} S dvol = -2 pi k (1 - (1+R^2)^-1), a finite negative limit
    for (double R : {5.0, 10.0}) {
        GridSpec g(R, 201, GridShape::disk);
        BackgroundMetric gk = BackgroundMetric::gk(1.0);
        ScalarField s = chern_scalar_curvature(gk, g);
        ScalarField rho = gk.rho_on(g);
        double total = quadrature(s, rho);
        double expect = -2.0 * M_PI * (1.0 - 1.0 / (1.0 + R * R));
        CHECK(total < 0.0);
        CHECK(total == doctest::Approx(expect).epsilon(0.03));
    }
}
