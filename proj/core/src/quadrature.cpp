#include "kwplane/quadrature.hpp"

#include <cmath>

namespace kw {

namespace {

// tensor trapezoid weight along one axis
inline double axis_weight(int i, int n) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

double grid_quadrature(const ScalarField& field, const std::function<double(int, int)>& weight) {
    const GridSpec& g = field.grid();
    const int n = g.n();
    const double cell = g.spacing() * g.spacing();
    double sum = 0.0;
    if (g.shape() == GridShape::square) {
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                sum += axis_weight(i, n) * axis_weight(j, n) * field(i, j) * weight(i, j);
    } else {
        // disk: cell sum over unmasked nodes
        const double r2 = g.radius() * g.radius();
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                double x = g.x(i), y = g.y(j);
                if (x * x + y * y <= r2 * (1.0 + 1e-14))
                    sum += field(i, j) * weight(i, j);
            }
    }
    return sum * cell;
}

// adaptive Simpson on [a,b]
double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
         + simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate_segment(const std::function<double(double)>& f, double a, double b, double tol) {
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

// A doubling tail [R, 2R] of a power-law-like integrand shrinks by the
// constant factor 4^{E+1} per doubling (E the area exponent); geometric
// decay of the segment contributions is the convergence test, and the
// geometric series extrapolates the remaining tail.
constexpr double kGeomRatioThreshold = 0.97;

} // namespace

double quadrature(const ScalarField& field, const PowerProfile& weight, const GridSpec& grid) {
    require_grid(field, grid, "quadrature");
    const GridSpec& g = field.grid();
    return grid_quadrature(field, [&](int i, int j) { return weight(g.x(i), g.y(j)); });
}

double quadrature(const ScalarField& field, const ScalarField& weight) {
    require_same_grid(field, weight, "quadrature");
    return grid_quadrature(field, [&](int i, int j) { return weight(i, j); });
}

double quadrature(const ScalarField& field) {
    return grid_quadrature(field, [](int, int) { return 1.0; });
}

RadialIntegral integrate_radial_r2(const std::function<double(double)>& f_of_r, double rel_tol,
                                   int max_doublings) {
    auto integrand = [&](double r) { return 2.0 * M_PI * r * f_of_r(r); };
    RadialIntegral out;
    double R = 1.0;
    double total = integrate_segment(integrand, 0.0, R, rel_tol);
    double seg_prev = 0.0;
    double ratio = 0.0;
    for (int d = 0; d < max_doublings; ++d) {
        double seg = integrate_segment(integrand, R, 2.0 * R, 0.25 * rel_tol * std::max(1.0, std::abs(total)));
        total += seg;
        R *= 2.0;
        ratio = (d > 0 && std::abs(seg_prev) > 0.0) ? std::abs(seg) / std::abs(seg_prev) : 0.0;
        seg_prev = seg;
        out.partial = total;
        double scale = std::max(1.0, std::abs(total));
        if (d > 0 && std::abs(seg) <= rel_tol * scale && ratio < kGeomRatioThreshold) {
            double tail = std::abs(seg) * ratio / (1.0 - ratio);
            out.convergent = true;
            out.value = total + (seg >= 0 ? tail : -tail);
            out.tail_bound = tail + std::abs(seg);
            return out;
        }
    }
    if (ratio > 0.0 && ratio < kGeomRatioThreshold) {
        double tail = std::abs(seg_prev) * ratio / (1.0 - ratio);
        out.convergent = true;
        out.value = total + (seg_prev >= 0 ? tail : -tail);
        out.tail_bound = tail + std::abs(seg_prev);
        return out;
    }
    out.convergent = false;
    out.tail_bound = std::abs(seg_prev);
    return out;
}

RadialIntegral integrate_profile_r2(const PowerProfile& p, double rel_tol) {
    // partial integral to radius R in closed form:
    //   int_0^R c (1+r^2)^b 2 pi r dr = c pi ((1+R^2)^{b+1} - 1)/(b+1)
    const double b = p.exponent, c = p.coefficient;
    auto partial_to = [&](double R) {
        double s = 1.0 + R * R;
        if (b == -1.0) return c * M_PI * std::log(s);
        return c * M_PI * (std::pow(s, b + 1.0) - 1.0) / (b + 1.0);
    };
    RadialIntegral out;
    // doubling ladder past r = 1e6, watching the tail-segment decay rate
    double R = 1.0;
    double prev_part = partial_to(R);
    double seg_prev = prev_part;
    double ratio = 1.0;
    for (int d = 0; d < 21; ++d) {
        R *= 2.0;
        double part = partial_to(R);
        double seg = part - prev_part;
        ratio = std::abs(seg_prev) > 0.0 ? std::abs(seg) / std::abs(seg_prev) : 0.0;
        prev_part = part;
        seg_prev = seg;
        out.partial = part;
    }
    (void)rel_tol;
    if (ratio < kGeomRatioThreshold) {
        // shrinking tail: finish with the exact power-law remainder
        double tail = std::abs(c) * M_PI * std::pow(1.0 + R * R, b + 1.0) / std::abs(b + 1.0);
        out.convergent = true;
        out.tail_bound = tail;
        out.value = prev_part + (c > 0 ? tail : -tail);
    } else {
        out.convergent = false; // partial integrals still growing at r > 1e6
        out.tail_bound = std::abs(seg_prev);
    }
    return out;
}

} // namespace kw
