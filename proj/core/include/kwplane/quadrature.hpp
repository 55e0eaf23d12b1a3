#pragma once

#include <optional>

#include "kwplane/power_profile.hpp"
#include "kwplane/scalar_field.hpp"

namespace kw {

/// Composite trapezoid integral of field * weight over the grid domain
/// (square: tensor trapezoid weights; disk: cell-area sum over unmasked
/// nodes).
double quadrature(const ScalarField& field, const PowerProfile& weight, const GridSpec& grid);

/// Same with a sampled weight.
double quadrature(const ScalarField& field, const ScalarField& weight);

/// Plain integral of a field over its grid domain.
double quadrature(const ScalarField& field);

/// Improper integral of a power profile over all of R^2, by adaptive
/// radial quadrature under radius doubling with a closed-form tail bound.
/// Converges iff exponent < -1; divergence is reported, not a number.
struct RadialIntegral {
    bool convergent = false;
    double value = 0.0;      // meaningful only when convergent
    double tail_bound = 0.0; // last tail estimate
    double partial = 0.0;    // last partial integral (grows when divergent)
};

RadialIntegral integrate_profile_r2(const PowerProfile& p, double rel_tol = 1e-10);

/// Adaptive radial integral of an arbitrary radial integrand F(r) against
/// the area element 2*pi*r*dr, truncated by radius doubling until the last
/// doubling contributes less than rel_tol of the running total (or judged
/// divergent after max_doublings).
RadialIntegral integrate_radial_r2(const std::function<double(double)>& f_of_r,
                                   double rel_tol = 1e-10, int max_doublings = 40);

} // namespace kw
