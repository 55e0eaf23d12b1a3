#pragma once

#include <optional>

#include "kwplane/problem.hpp"
#include "kwplane/schedule.hpp"
#include "kwplane/solve_report.hpp"

namespace kw {

struct DirichletSolveInfo {
    int newton_iters = 0;
    int flow_steps = 0;
    double residual = 0.0;
};

/// Solve the regularized Dirichlet problem on one grid:
///   (1/2) rho^{-1} Delta_h u + h e^u - f - eps u = 0   (interior),
///   u = 0 on the boundary,
/// by implicit-Euler heat flow into the Newton basin, then damped Newton.
/// Throws SolveError on Newton divergence. eps = 0 without a warm start is
/// rejected when the sign condition fails (use continuation instead).
ScalarField solve_dirichlet(const ProblemSpec& p, const GridSpec& grid, double eps,
                            const std::optional<ScalarField>& warm_start = std::nullopt,
                            const Schedule& schedule = Schedule{},
                            DirichletSolveInfo* info = nullptr);

/// Warm-started sweep down the epsilon ladder on a fixed grid. Declares
/// convergence by the Cauchy criterion; optionally finishes with one
/// warm-started eps = 0 solve (schedule.polish_eps_zero). Throws
/// BlowUpError when sup|u_eps| passes schedule.sup_cap.
SolveReport continue_epsilon(const ProblemSpec& p, const GridSpec& grid, const Schedule& schedule);

/// Runs continue_epsilon on each scheduled radius, warm-starting from the
/// previous solution (bilinear interpolation, zero-extended). Convergence
/// is the restriction drift on the smallest domain; a non-Cauchy final
/// drift downgrades domain_converged but still returns the solution.
SolveReport continue_domain(const ProblemSpec& p, const Schedule& schedule);

/// One member of the multiplicity family.
struct FamilyMember {
    double k = 0.0;
    SolveReport report;     // solution = bounded part v_k on g_k
    ScalarField u;          // assembled u_k = (v_k + k log(1+|z|^2)) / 2
};

/// For each admissible k: bg = g_k, f = S^Ch_{g_k}, h = K, continuation,
/// then u_k assembled from the bounded part. Inadmissible k is rejected
/// with the computed window in the message.
std::vector<FamilyMember> solve_family(const std::function<double(double, double)>& K,
                                       const DecayCertificate& cert,
                                       const std::vector<double>& ks,
                                       const Schedule& schedule = Schedule::family_defaults());

/// Check the zeroth-order bound sup|u_eps| <= (||f||_inf + ||h||_inf)/eps
/// and the gradient bound  int |du|^2 <= 2 int u (h - f) dvol_g  on the
/// trace row(s) at regularization eps (> 0). Verdicts, not exceptions.
BoundsRecord verify_apriori_bounds(const SolveReport& report, const ProblemSpec& p, double eps,
                                   double sup_tol = 1e-8, double grad_tol = 1e-6);

/// All positive-eps rows of the trace.
BoundsRecord verify_apriori_bounds_all(const SolveReport& report, const ProblemSpec& p,
                                       double sup_tol = 1e-8, double grad_tol = 1e-6);

/// Row-level form of the same checks; trace rows are self-contained, so
/// saved reports can be re-verified without the problem data.
BoundsRecord verify_trace_bounds(const std::vector<TraceRow>& rows, double sup_tol = 1e-8,
                                 double grad_tol = 1e-6);

/// Subharmonic comparison of two candidate solutions of the same problem:
/// w = e^{va-vb} + e^{vb-va} must be discretely subharmonic up to
/// tolerance, and its oscillation measures their distance. Grids must
/// share radius and n; shapes may differ (comparison on the common
/// interior).
UniquenessRecord verify_uniqueness(const ScalarField& u_a, const ScalarField& u_b,
                                   const ProblemSpec& p, double tolerance);

} // namespace kw
