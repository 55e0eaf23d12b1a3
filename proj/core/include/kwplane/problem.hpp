#pragma once

#include <optional>
#include <string>

#include "kwplane/metric.hpp"
#include "kwplane/power_profile.hpp"
#include "kwplane/scalar_field.hpp"

namespace kw {

/// Certificate |F(z)| <= lambda * (1+|z|^2)^{-l} for the problem data.
struct DecayCertificate {
    double lambda = 1.0; // > 0
    double l = 2.0;      // > 1

    void validate() const {
        if (!(lambda > 0.0)) throw InvalidInput("DecayCertificate: lambda must be positive");
        if (!(l > 1.0)) throw InvalidInput("DecayCertificate: decay power l must exceed 1");
    }
    double bound_at(double rsq) const { return lambda * std::pow(1.0 + rsq, -l); }
};

/// One Kazdan-Warner problem on a background metric:
///   (1/2) rho^{-1} Delta u + h e^u = f  (+ eps u under regularization),
/// with nonpositive h and certified decay of f and h.
struct ProblemSpec {
    // Analytic data; sampled onto each continuation grid on demand.
    std::function<double(double, double)> f;
    std::function<double(double, double)> h;
    BackgroundMetric bg = BackgroundMetric::flat();
    DecayCertificate certificate;

    ScalarField sample_f(const GridSpec& g) const { return ScalarField::sample(g, f); }
    ScalarField sample_h(const GridSpec& g) const { return ScalarField::sample(g, h); }

    /// Structural validation on a grid: h <= 0 and not identically zero,
    /// |f| and |h| within the certificate nodewise. Violations throw.
    /// The integral sign condition (quadrature(f, dvol_g) < 0) is dynamic:
    /// it is reported by check_sign_condition and enforced by the
    /// continuation ladder's blow-up detector, not here.
    void validate_on(const GridSpec& grid) const;

    /// integral of f against the g-volume element rho dA over the grid
    /// domain; negative for well-posed data.
    double f_mass(const GridSpec& grid) const;
    bool check_sign_condition(const GridSpec& grid) const { return f_mass(grid) < 0.0; }
};

/// The data (K, certificate) of a prescribed-curvature family run:
/// for each admissible k the solver uses bg = g_k, f = S^Ch_{g_k}, h = K.
ProblemSpec family_problem(const std::function<double(double, double)>& K,
                           const DecayCertificate& cert, double k);

} // namespace kw
