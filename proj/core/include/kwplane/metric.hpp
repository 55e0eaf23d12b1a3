#pragma once

#include <optional>
#include <string>

#include "kwplane/power_profile.hpp"
#include "kwplane/scalar_field.hpp"

namespace kw {

/// Conformal metric g = rho * g0 on R^2, given by its (strictly positive)
/// conformal factor. Either analytic, as a PowerProfile, or sampled.
/// The canonical family is g_k = (1+|z|^2)^k g0.
class BackgroundMetric {
public:
    /// Analytic factor; coefficient must be positive.
    explicit BackgroundMetric(PowerProfile factor);
    /// Sampled factor; must be positive at every node.
    explicit BackgroundMetric(ScalarField factor);

    static BackgroundMetric flat() { return BackgroundMetric(PowerProfile{1.0, 0.0}); }
    /// g_k = (1+|z|^2)^k g0 = phi^{-k} g0 with phi = (1+|z|^2)^{-1}.
    static BackgroundMetric gk(double k) { return BackgroundMetric(PowerProfile{1.0, k}); }

    bool analytic() const { return profile_.has_value(); }
    const PowerProfile& profile() const;
    const ScalarField& sampled() const;

    /// Conformal factor at a point (sampled metrics require grid alignment
    /// and are evaluated through rho_on instead).
    double rho(double x, double y) const;

    /// Conformal factor sampled on a grid; for sampled metrics the grid
    /// must equal the stored one.
    ScalarField rho_on(const GridSpec& grid) const;

    std::string describe() const;

private:
    std::optional<PowerProfile> profile_;
    std::optional<ScalarField> sampled_;
};

} // namespace kw
