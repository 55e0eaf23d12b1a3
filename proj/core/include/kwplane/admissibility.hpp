#pragma once

#include <limits>

#include "kwplane/power_profile.hpp"

namespace kw {

/// Power-law data (alpha, phi, psi, k) for the Main-Assumption
/// sufficiency checks on (R^2, g_k), g_k = phi^{-k} g0. All three
/// profiles must be positive; alpha must extend over CP^1, which for a
/// pure power law forces exponent(alpha) = -2.
struct AdmissibilityQuery {
    PowerProfile alpha{1.0, -2.0};
    PowerProfile phi{1.0, -1.0};
    PowerProfile psi{1.0, -2.0};
    double k = 0.0;

    void validate() const;
};

/// Real interval with endpoint closedness; hi may be +infinity.
struct Window {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = false;
    bool hi_closed = false;
    bool empty = true;

    bool contains(double x) const {
        if (empty) return false;
        if (x < lo || (x == lo && !lo_closed)) return false;
        if (x > hi || (x == hi && !hi_closed)) return false;
        return true;
    }
    static double inf() { return std::numeric_limits<double>::infinity(); }
};

/// alpha phi^k psi^{-1} in L^inf: exponent arithmetic
/// a + k b - c <= 0 for the (1+r^2) powers a, b, c.
bool check_linfty(const AdmissibilityQuery& q);

/// Open window of q > 1 with alpha^{1-q} (phi^{-k} psi)^q in L^1(R^2),
/// i.e. a(1-q) + q(c - k b) < -1. Possibly empty, possibly (q0, inf).
Window q_window(const AdmissibilityQuery& q);

/// Admissible exponents for the multiplicity family under the certificate
/// (l, lambda): the intersection [l-2, l-1) `cap` (0, lambda/2].
Window admissible_k(double l, double lambda);

/// Does the closed-form curvature of g_k obey the decay certificate:
/// 4k (1+r^2)^{-(k+2)} <= 2 lambda (1+r^2)^{-l}, i.e.
/// k+2 >= l and 4k <= 2 lambda. Requires k > 0.
bool check_curvature_bound(double k, double l, double lambda);

} // namespace kw
