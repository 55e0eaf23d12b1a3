#pragma once

#include <string>
#include <vector>

#include "kwplane/scalar_field.hpp"

namespace kw {

/// One continuation step. Self-contained: carries everything the a-priori
/// bound checks need, so saved reports can be re-verified without the
/// solution fields.
struct TraceRow {
    double radius = 0.0;
    int n = 0;
    double eps = 0.0;
    int newton_iters = 0;
    int flow_steps = 0;
    double residual = 0.0;     // sup-norm of the eps-equation residual
    double sup_norm = 0.0;     // sup |u_eps|
    double grad_l2_sq = 0.0;   // discrete Dirichlet energy  sum (du)^2
    double energy_rhs = 0.0;   // 2 int u (h - f) dvol_g, same discretization
    double f_sup = 0.0;
    double h_sup = 0.0;
};

/// Verdict of one a-priori bound check (not an exception).
struct BoundCheck {
    std::string name;
    bool pass = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0; // rhs - lhs
};

struct BoundsRecord {
    std::vector<BoundCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Solution plus its continuation history and verified-bound verdicts.
struct SolveReport {
    ScalarField solution;
    std::vector<TraceRow> trace;
    BoundsRecord bounds_checked;
    bool eps_converged = false;    // Cauchy criterion fired on the ladder
    bool domain_converged = true;  // restriction drift below tolerance
    double final_residual = 0.0;
    double last_cauchy_diff = 0.0;
    double last_domain_drift = 0.0;
    std::vector<double> domain_drifts; // one per domain transition
};

/// Subharmonic-comparison verdict for two candidate solutions.
struct UniquenessRecord {
    double oscillation = 0.0;       // sup w - inf w,  w = e^{va-vb} + e^{vb-va}
    double min_laplacian_w = 0.0;   // most negative discrete Delta w seen
    double tolerance = 0.0;
    bool subharmonic_ok = false;    // Delta_h w >= -tolerance everywhere
    int nodes_compared = 0;
};

} // namespace kw
