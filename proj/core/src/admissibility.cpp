#include "kwplane/admissibility.hpp"

#include <cmath>

#include "kwplane/errors.hpp"

namespace kw {

void AdmissibilityQuery::validate() const {
    if (!alpha.positive() || !phi.positive() || !psi.positive())
        throw InvalidInput("AdmissibilityQuery: alpha, phi, psi must be positive profiles");
    if (alpha.exponent != -2.0)
        throw InvalidInput(
            "AdmissibilityQuery: a pure power-law alpha extends over CP^1 only with exponent -2");
}

bool check_linfty(const AdmissibilityQuery& q) {
    q.validate();
    // alpha phi^k psi^{-1} = (1+r^2)^{a + k b - c} bounded iff exponent <= 0
    return q.alpha.exponent + q.k * q.phi.exponent - q.psi.exponent <= 0.0;
}

Window q_window(const AdmissibilityQuery& q) {
    q.validate();
    const double a = q.alpha.exponent;
    const double t = q.psi.exponent - q.k * q.phi.exponent - a;
    // L^1 exponent: a(1-q) + q(c - k b) = a + q t, integrable iff a + q t < -1
    Window w;
    w.lo_closed = w.hi_closed = false;
    if (t < 0.0) {
        double q0 = (-1.0 - a) / t; // q > q0
        w.lo = std::max(1.0, q0);
        w.hi = Window::inf();
        w.empty = false;
    } else if (t == 0.0) {
        if (a < -1.0) {
            w.lo = 1.0;
            w.hi = Window::inf();
            w.empty = false;
        }
    } else {
        double q0 = (-1.0 - a) / t; // q < q0
        if (q0 > 1.0) {
            w.lo = 1.0;
            w.hi = q0;
            w.empty = false;
        }
    }
    return w;
}

Window admissible_k(double l, double lambda) {
    if (!(l > 1.0)) throw InvalidInput("admissible_k: decay power l must exceed 1");
    if (!(lambda > 0.0)) throw InvalidInput("admissible_k: lambda must be positive");
    // [l-2, l-1) intersect (0, lambda/2]
    Window w;
    w.lo = l - 2.0;
    w.lo_closed = true;
    w.hi = l - 1.0;
    w.hi_closed = false;
    if (0.0 > w.lo || (0.0 == w.lo && w.lo_closed)) {
        w.lo = 0.0;
        w.lo_closed = false;
    }
    double cap = 0.5 * lambda;
    if (cap < w.hi) {
        w.hi = cap;
        w.hi_closed = true;
    }
    w.empty = w.lo > w.hi || (w.lo == w.hi && !(w.lo_closed && w.hi_closed));
    return w;
}

bool check_curvature_bound(double k, double l, double lambda) {
    if (!(k > 0.0)) throw InvalidInput("check_curvature_bound: k must be positive");
    // 4k (1+r^2)^{-(k+2)} <= 2 lambda (1+r^2)^{-l} for all r
    return (k + 2.0 >= l) && (4.0 * k <= 2.0 * lambda);
}

} // namespace kw
