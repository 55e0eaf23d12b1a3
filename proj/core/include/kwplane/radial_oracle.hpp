#pragma once

#include <functional>
#include <vector>

#include "kwplane/power_profile.hpp"

namespace kw {

/// Radially symmetric profile v(r) on a mesh starting at r = 0.
struct RadialProfile {
    std::vector<double> r;
    std::vector<double> v;

    double sup_norm() const;
    /// Linear interpolation; clamps outside the mesh.
    double at(double radius) const;
};

/// Independent reference solver for radially symmetric instances of the
/// prescribed-curvature equation on g_k:
///   (1/2)(1+r^2)^{-k} (v'' + v'/r) + K(r) e^v = -2k (1+r^2)^{-(k+2)},
///   v'(0) = 0,  v(R) = 0.
/// 1D finite differences (optionally geometrically stretched mesh) with a
/// hand-rolled tridiagonal Newton driver -- deliberately disjoint from the
/// 2D path. K must be nonpositive. Newton residual 1e-12.
RadialProfile solve_radial(const PowerProfile& K, double k, double R, int m,
                           double stretch = 1.0, double eps = 0.0);

/// Same BVP with an arbitrary (nonpositive) radial coefficient K(r);
/// used for manufactured solutions and vortex cross-checks.
RadialProfile solve_radial_fn(const std::function<double(double)>& K_of_r, double k, double R,
                              int m, double stretch = 1.0, double eps = 0.0);

/// Fully general radial reference solve:
///   (1/2)(1+r^2)^{-k} (v'' + v'/r) + h(r) e^v = f(r) + eps v,
/// v'(0) = 0, v(R) = 0.
RadialProfile solve_radial_general(const std::function<double(double)>& h_of_r,
                                   const std::function<double(double)>& f_of_r, double k, double R,
                                   int m, double stretch = 1.0, double eps = 0.0);

/// Least-squares fit of u(r) against log r over [r_lo, r_hi]
/// (r_lo >= 5, at least 10 mesh nodes). max_dev is the largest
/// |u - k_expected log r| over the window.
struct GrowthFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_dev = 0.0;
    int nodes = 0;
};

GrowthFit growth_fit(const RadialProfile& p, double k_expected, double r_lo, double r_hi);

} // namespace kw
