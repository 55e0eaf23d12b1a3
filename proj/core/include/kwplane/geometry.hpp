#pragma once

#include "kwplane/metric.hpp"
#include "kwplane/scalar_field.hpp"

namespace kw {

// Operator convention, fixed once for the whole library:
//   sqrt(-1) Lambda_{omega_{g0}} dbar d = (1/2) (d^2/dx^2 + d^2/dy^2),
// and on g = rho g0 the half-Laplacian is (1/2) rho^{-1} Delta.
// The classical form Delta u + h e^{2u} = f corresponds to u -> 2u.

/// Half-Laplacian of u on the background metric: (1/2) rho^{-1} Delta_h u
/// at interior nodes (5-point stencil, actual neighbor values); boundary
/// values are passed through unchanged.
ScalarField half_laplacian(const ScalarField& u, const BackgroundMetric& bg);

/// Chern scalar curvature of g = rho g0:  S = -(1/2) rho^{-1} Delta log rho.
/// Analytic factors use the closed form; sampled factors the 5-point
/// stencil on log rho (boundary nodes 0).
ScalarField chern_scalar_curvature(const BackgroundMetric& bg, const GridSpec& grid);

/// Closed-form pointwise curvature for analytic metrics.
/// For g_k this is -2k (1+|z|^2)^{-(k+2)}.
double chern_scalar_curvature_at(const BackgroundMetric& bg, double x, double y);

/// Curvature after the conformal change g~ = e^u g:
///   S~ = e^{-u} (S_g - half_laplacian(u, bg)).
/// Boundary nodes carry e^{-u} S_g (the stencil does not reach them).
ScalarField conformal_change_curvature(const ScalarField& u, const BackgroundMetric& bg);

/// Flat 5-point Laplacian with zero Dirichlet ghosts: boundary/masked
/// neighbors contribute 0, output is 0 at boundary nodes.
ScalarField dirichlet_laplacian_apply(const ScalarField& u, const GridSpec& grid);

} // namespace kw
