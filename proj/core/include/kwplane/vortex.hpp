#pragma once

#include <variant>

#include "kwplane/problem.hpp"
#include "kwplane/schedule.hpp"
#include "kwplane/solver.hpp"

namespace kw {

/// Data of the abelian vortex equation on a line bundle over C with
/// background omega_k: the contracted curvature of the reference Hermitian
/// structure, the squared norm of the holomorphic section, and the target
/// lambda (constant or a field). The bundle enters only through these
/// scalars.
struct VortexData {
    std::function<double(double, double)> curvature_K; // i Lambda F_K
    std::function<double(double, double)> section_sq;  // |phi|^2 >= 0, not identically 0
    std::function<double(double, double)> lambda = [](double, double) { return 0.0; };
    BackgroundMetric bg = BackgroundMetric::flat();
    DecayCertificate certificate;
};

/// Reduce to the scalar problem: h = -(1/2)|phi|^2, f = i Lambda F_K - lambda/2.
/// Rejects on certificate violation (|i Lambda F_K - lambda/2| + |phi|^2
/// must obey the decay bound), on |phi|^2 degenerate, and on the sign
/// condition  int (2 i Lambda F_K - lambda) dvol < 0 failing on the
/// largest scheduled domain.
ProblemSpec reduce_to_scalar(const VortexData& d, const Schedule& schedule = Schedule{});

struct VortexReport {
    SolveReport scalar;            // solution = conformal exponent field
    ScalarField vortex_residual;   // residual of the vortex equation via F_H = F_K - dbar d f
    double vortex_residual_sup = 0.0;
};

/// Solve the vortex equation through the scalar reduction; the new
/// Hermitian structure is H = e^f K and the prescribed identity is checked
/// by recomputing i Lambda F_H + (1/2)|phi|^2 e^f - lambda/2 on the grid.
VortexReport solve_vortex(const VortexData& d, const Schedule& schedule = Schedule{});

} // namespace kw
