#pragma once

#include <vector>

#include "kwplane/errors.hpp"
#include "kwplane/grid.hpp"

namespace kw {

/// Continuation ladders and solver knobs: the exhaustion radii R_j, the
/// epsilon ladder (strictly decreasing, ending at eps_min > 0), the
/// implicit heat-flow step, and the convergence tolerances.
struct Schedule {
    std::vector<double> radii{5.0, 10.0, 20.0, 40.0};
    std::vector<double> epsilons = default_epsilons(20);
    int n = 201;                      // grid nodes per axis, all radii
    GridShape shape = GridShape::square;
    double time_step = 0.5;           // implicit Euler tau
    double tol_newton = 1e-10;        // residual, sup-norm
    double tol_continuation = 1e-6;   // Cauchy difference, sup-norm
    double sup_cap = 2.5;             // blow-up detector threshold
    double newton_switch = 1e-2;      // flow -> Newton residual threshold
    int max_newton = 50;
    int max_flow_steps = 400;
    int max_damping = 30;
    bool polish_eps_zero = true;      // final warm-started eps = 0 solve

    /// {1, 2^-1, ..., 2^-depth}.
    static std::vector<double> default_epsilons(int depth) {
        std::vector<double> eps;
        eps.reserve(depth + 1);
        double e = 1.0;
        for (int j = 0; j <= depth; ++j, e *= 0.5) eps.push_back(e);
        return eps;
    }

    /// Defaults for multiplicity-family runs: shallower epsilon floor
    /// (2^-10, where the regularization still screens the artificial
    /// Dirichlet boundary out of the growth window) and no eps=0 polish.
    static Schedule family_defaults() {
        Schedule s;
        s.epsilons = default_epsilons(10);
        s.polish_eps_zero = false;
        return s;
    }

    void validate() const;
};

} // namespace kw
