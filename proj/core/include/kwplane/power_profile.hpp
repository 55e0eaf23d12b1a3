#pragma once

#include <cmath>

#include "kwplane/errors.hpp"

namespace kw {

/// Radially symmetric weight  z -> c * (1 + |z|^2)^beta.
///
/// The building block for conformal factors, decay certificates and the
/// integrable weights of the admissibility checks. The coefficient may be
/// negative (curvature-type data); contexts that require positivity
/// (metrics, admissibility weights) check it explicitly.
struct PowerProfile {
    double coefficient = 1.0;
    double exponent = 0.0;

    PowerProfile() = default;
    PowerProfile(double c, double beta) : coefficient(c), exponent(beta) {}

    double at_rsq(double rsq) const { return coefficient * std::pow(1.0 + rsq, exponent); }
    double operator()(double x, double y) const { return at_rsq(x * x + y * y); }

    bool positive() const { return coefficient > 0.0; }

    /// Pointwise product is again a power profile.
    PowerProfile operator*(const PowerProfile& o) const {
        return {coefficient * o.coefficient, exponent + o.exponent};
    }

    /// Real power; requires a positive coefficient.
    PowerProfile pow(double p) const {
        if (!positive())
            throw InvalidInput("PowerProfile::pow requires a positive coefficient");
        return {std::pow(coefficient, p), exponent * p};
    }
};

/// Flat Laplacian of log of the profile: Delta log(c(1+r^2)^b) = 4b/(1+r^2)^2.
inline double laplacian_log_profile(const PowerProfile& p, double rsq) {
    return 4.0 * p.exponent / ((1.0 + rsq) * (1.0 + rsq));
}

} // namespace kw
