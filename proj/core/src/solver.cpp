#include "kwplane/solver.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <cmath>
#include <sstream>

#include "kwplane/admissibility.hpp"

namespace kw {

namespace {

// Over this many unknowns the direct factorization gives way to
// preconditioned CG.
constexpr int kDirectSolveLimit = 260000;

// exp with a clamp that keeps intermediate Newton states finite
inline double safe_exp(double x) { return std::exp(std::min(x, 700.0)); }

/// One grid's worth of sampled problem data plus the interior linear
/// algebra: G(v) = (1/2) Delta_h v + rho (h e^v - f - eps v) on interior
/// unknowns, zero Dirichlet ghosts. The reported residual is the original
/// equation's, sup_i |G_i| / rho_i.
class DirichletSolver {
public:
    DirichletSolver(const ProblemSpec& p, const GridSpec& grid, const Schedule& sched)
        : grid_(grid), sched_(sched),
          f_(p.sample_f(grid)), h_(p.sample_h(grid)), rho_(p.bg.rho_on(grid)) {
        const auto& nodes = grid_.interior_nodes();
        m_ = static_cast<int>(nodes.size());
        const double h2 = grid_.spacing() * grid_.spacing();

        // constant part: (1/2)(-Delta_h), SPD
        std::vector<Eigen::Triplet<double>> trip;
        trip.reserve(5 * m_);
        const int n = grid_.n();
        for (int row = 0; row < m_; ++row) {
            int idx = nodes[row];
            int i = idx % n, j = idx / n;
            trip.emplace_back(row, row, 2.0 / h2);
            for (auto [di, dj] : {std::pair{-1, 0}, {1, 0}, {0, -1}, {0, 1}}) {
                int nb = grid_.index(i + di, j + dj);
                int col = grid_.interior_rank(nb);
                if (col >= 0) trip.emplace_back(row, col, -0.5 / h2);
            }
        }
        base_.resize(m_, m_);
        base_.setFromTriplets(trip.begin(), trip.end());
        if (m_ <= kDirectSolveLimit) ldlt_.analyzePattern(base_);
    }

    const ScalarField& f() const { return f_; }
    const ScalarField& h() const { return h_; }
    const ScalarField& rho() const { return rho_; }
    double f_sup() const { return f_.sup_norm(); }
    double h_sup() const { return h_.sup_norm(); }

    ScalarField solve(double eps, const std::optional<ScalarField>& warm, DirichletSolveInfo& info) {
        Eigen::VectorXd v = warm ? restrict_interior(*warm) : Eigen::VectorXd::Zero(m_);

        Eigen::VectorXd g(m_);
        double res = residual(v, eps, g);

        // implicit heat flow into the Newton basin
        info.flow_steps = 0;
        while (res > sched_.newton_switch && info.flow_steps < sched_.max_flow_steps) {
            Eigen::VectorXd delta = linear_solve(v, eps, 1.0 / sched_.time_step, g);
            v += delta;
            res = residual(v, eps, g);
            ++info.flow_steps;
            if (!std::isfinite(res))
                throw SolveError("heat-flow step produced a non-finite residual", res);
        }

        // damped Newton on the stationary equation
        info.newton_iters = 0;
        while (res > sched_.tol_newton) {
            if (info.newton_iters >= sched_.max_newton)
                throw SolveError("Newton did not reach tolerance", res);
            Eigen::VectorXd delta = linear_solve(v, eps, 0.0, g);
            double t = 1.0;
            Eigen::VectorXd trial;
            Eigen::VectorXd gt(m_);
            double res_t = res;
            int halvings = 0;
            for (;; ++halvings) {
                trial = v + t * delta;
                res_t = residual(trial, eps, gt);
                if (std::isfinite(res_t) && res_t < res) break;
                if (halvings >= sched_.max_damping)
                    throw SolveError("Newton diverged after maximum damped steps", res);
                t *= 0.5;
            }
            v.swap(trial);
            g.swap(gt);
            res = res_t;
            ++info.newton_iters;
        }
        info.residual = res;
        return expand(v);
    }

    /// Flat discrete Dirichlet energy sum over grid edges of (dv)^2.
    double dirichlet_energy(const ScalarField& u) const {
        const int n = grid_.n();
        double e = 0.0;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i + 1 < n; ++i) {
                double d = u(i + 1, j) - u(i, j);
                e += d * d;
            }
        for (int j = 0; j + 1 < n; ++j)
            for (int i = 0; i < n; ++i) {
                double d = u(i, j + 1) - u(i, j);
                e += d * d;
            }
        return e;
    }

    /// 2 int u (h - f) dvol_g with dvol_g = rho dA, interior sum.
    double energy_rhs(const ScalarField& u) const {
        const double cell = grid_.spacing() * grid_.spacing();
        double s = 0.0;
        for (int idx : grid_.interior_nodes())
            s += rho_.at(idx) * u.at(idx) * (h_.at(idx) - f_.at(idx));
        return 2.0 * s * cell;
    }

private:
    Eigen::VectorXd restrict_interior(const ScalarField& u) const {
        Eigen::VectorXd v(m_);
        const auto& nodes = grid_.interior_nodes();
        for (int r = 0; r < m_; ++r) v[r] = u.at(nodes[r]);
        return v;
    }

    ScalarField expand(const Eigen::VectorXd& v) const {
        ScalarField out(grid_);
        const auto& nodes = grid_.interior_nodes();
        for (int r = 0; r < m_; ++r) out.values()[nodes[r]] = v[r];
        return out;
    }

    // G and sup_i |G_i|/rho_i
    double residual(const Eigen::VectorXd& v, double eps, Eigen::VectorXd& g) const {
        g = -(base_ * v); // (1/2) Delta_h v
        const auto& nodes = grid_.interior_nodes();
        double sup = 0.0;
        for (int r = 0; r < m_; ++r) {
            int idx = nodes[r];
            double rho = rho_.at(idx);
            g[r] += rho * (h_.at(idx) * safe_exp(v[r]) - f_.at(idx) - eps * v[r]);
            sup = std::max(sup, std::abs(g[r]) / rho);
        }
        return sup;
    }

    // solve (shift*rho + rho(eps - h e^v) + (1/2)(-Delta_h)) delta = g
    Eigen::VectorXd linear_solve(const Eigen::VectorXd& v, double eps, double shift,
                                 const Eigen::VectorXd& g) {
        Eigen::SparseMatrix<double> A = base_;
        const auto& nodes = grid_.interior_nodes();
        for (int r = 0; r < m_; ++r) {
            int idx = nodes[r];
            double rho = rho_.at(idx);
            A.coeffRef(r, r) += rho * (shift + eps - h_.at(idx) * safe_exp(v[r]));
        }
        if (m_ <= kDirectSolveLimit) {
            ldlt_.factorize(A);
            if (ldlt_.info() != Eigen::Success)
                throw SolveError("sparse factorization failed", 0.0);
            return ldlt_.solve(g);
        }
        Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
        cg.setTolerance(1e-13);
        cg.setMaxIterations(20000);
        cg.compute(A);
        Eigen::VectorXd delta = cg.solve(g);
        if (cg.info() != Eigen::Success)
            throw SolveError("conjugate gradient did not converge", cg.error());
        return delta;
    }

    GridSpec grid_;
    Schedule sched_;
    ScalarField f_, h_, rho_;
    int m_ = 0;
    Eigen::SparseMatrix<double> base_;
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt_;
};

TraceRow make_row(const DirichletSolver& solver, const GridSpec& grid, double eps,
                  const DirichletSolveInfo& info, const ScalarField& v) {
    TraceRow row;
    row.radius = grid.radius();
    row.n = grid.n();
    row.eps = eps;
    row.newton_iters = info.newton_iters;
    row.flow_steps = info.flow_steps;
    row.residual = info.residual;
    row.sup_norm = v.sup_norm();
    row.grad_l2_sq = solver.dirichlet_energy(v);
    row.energy_rhs = solver.energy_rhs(v);
    row.f_sup = solver.f_sup();
    row.h_sup = solver.h_sup();
    return row;
}

SolveReport continue_epsilon_impl(const ProblemSpec& p, const GridSpec& grid,
                                  const Schedule& sched, const std::optional<ScalarField>& warm) {
    sched.validate();
    p.validate_on(grid);
    DirichletSolver solver(p, grid, sched);

    SolveReport report;
    std::optional<ScalarField> v = warm;
    std::optional<ScalarField> prev;
    for (double eps : sched.epsilons) {
        DirichletSolveInfo info;
        ScalarField next = solver.solve(eps, v, info);
        report.trace.push_back(make_row(solver, grid, eps, info, next));
        double sup = report.trace.back().sup_norm;
        if (sup > sched.sup_cap) {
            std::ostringstream os;
            os << "sup-norm blow-up on the epsilon ladder (sup=" << sup << " at eps=" << eps
               << "): sign/decay hypotheses likely violated";
            throw BlowUpError(os.str(), sup);
        }
        if (prev) {
            double diff = 0.0;
            for (int i = 0; i < next.size(); ++i)
                diff = std::max(diff, std::abs(next.at(i) - prev->at(i)));
            report.last_cauchy_diff = diff;
            if (diff <= sched.tol_continuation) {
                v = next;
                report.eps_converged = true;
                break;
            }
        }
        prev = next;
        v = std::move(next);
    }
    if (sched.polish_eps_zero) {
        DirichletSolveInfo info;
        ScalarField polished = solver.solve(0.0, v, info);
        report.trace.push_back(make_row(solver, grid, 0.0, info, polished));
        v = std::move(polished);
    }
    report.solution = *v;
    report.final_residual = report.trace.back().residual;
    return report;
}

} // namespace

ScalarField solve_dirichlet(const ProblemSpec& p, const GridSpec& grid, double eps,
                            const std::optional<ScalarField>& warm_start, const Schedule& schedule,
                            DirichletSolveInfo* info) {
    if (eps < 0.0) throw InvalidInput("solve_dirichlet: eps must be nonnegative");
    p.validate_on(grid);
    if (eps == 0.0 && !warm_start && !p.check_sign_condition(grid))
        throw SolveError(
            "eps = 0 without a warm start on a sign-violating problem (int f dvol >= 0); "
            "run the continuation ladder instead",
            0.0);
    DirichletSolver solver(p, grid, schedule);
    DirichletSolveInfo local;
    ScalarField out = solver.solve(eps, warm_start, local);
    if (info) *info = local;
    return out;
}

SolveReport continue_epsilon(const ProblemSpec& p, const GridSpec& grid, const Schedule& schedule) {
    return continue_epsilon_impl(p, grid, schedule, std::nullopt);
}

SolveReport continue_domain(const ProblemSpec& p, const Schedule& schedule) {
    schedule.validate();
    if (schedule.radii.empty()) throw InvalidInput("continue_domain: schedule has no radii");

    SolveReport report;
    std::optional<ScalarField> prev;
    double r_min = schedule.radii.front();
    for (double R : schedule.radii) {
        GridSpec grid(R, schedule.n, schedule.shape);
        std::optional<ScalarField> warm;
        if (prev) {
            warm = ScalarField::sample(grid, [&](double x, double y) {
                return bilinear_at(*prev, x, y, 0.0);
            });
            // interpolation must not invent values at boundary nodes
            for (int j = 0; j < grid.n(); ++j)
                for (int i = 0; i < grid.n(); ++i)
                    if (!grid.is_interior(i, j)) (*warm)(i, j) = 0.0;
        }
        SolveReport sub = continue_epsilon_impl(p, grid, schedule, warm);
        if (prev) {
            double drift = 0.0;
            for (int j = 0; j < grid.n(); ++j)
                for (int i = 0; i < grid.n(); ++i) {
                    double x = grid.x(i), y = grid.y(j);
                    if (std::abs(x) <= r_min && std::abs(y) <= r_min && grid.is_interior(i, j))
                        drift = std::max(drift, std::abs(sub.solution(i, j) - bilinear_at(*prev, x, y)));
                }
            report.domain_drifts.push_back(drift);
            report.last_domain_drift = drift;
        }
        for (auto& row : sub.trace) report.trace.push_back(row);
        report.eps_converged = sub.eps_converged;
        report.last_cauchy_diff = sub.last_cauchy_diff;
        report.final_residual = sub.final_residual;
        prev = std::move(sub.solution);
    }
    report.solution = std::move(*prev);
    report.domain_converged =
        report.domain_drifts.empty() || report.last_domain_drift <= schedule.tol_continuation;
    return report;
}

std::vector<FamilyMember> solve_family(const std::function<double(double, double)>& K,
                                       const DecayCertificate& cert, const std::vector<double>& ks,
                                       const Schedule& schedule) {
    cert.validate();
    Window window = admissible_k(cert.l, cert.lambda);
    std::vector<FamilyMember> members;
    members.reserve(ks.size());
    for (double k : ks) {
        if (!window.contains(k)) {
            std::ostringstream os;
            os << "family exponent k=" << k << " outside the admissible window ";
            if (window.empty)
                os << "(empty)";
            else
                os << (window.lo_closed ? "[" : "(") << window.lo << ", " << window.hi
                   << (window.hi_closed ? "]" : ")");
            os << " for l=" << cert.l << ", lambda=" << cert.lambda;
            throw InvalidInput(os.str());
        }
        FamilyMember member;
        member.k = k;
        ProblemSpec p = family_problem(K, cert, k);
        member.report = continue_domain(p, schedule);
        const ScalarField& v = member.report.solution;
        const GridSpec& g = v.grid();
        member.u = ScalarField(g);
        for (int j = 0; j < g.n(); ++j)
            for (int i = 0; i < g.n(); ++i) {
                double x = g.x(i), y = g.y(j);
                member.u(i, j) = 0.5 * (v(i, j) + k * std::log1p(x * x + y * y));
            }
        members.push_back(std::move(member));
    }
    return members;
}

BoundsRecord verify_trace_bounds(const std::vector<TraceRow>& rows, double sup_tol,
                                 double grad_tol) {
    BoundsRecord rec;
    for (const auto& row : rows) {
        if (!(row.eps > 0.0)) continue;
        std::ostringstream tag;
        tag << "R=" << row.radius << ",eps=" << row.eps;
        BoundCheck zeroth;
        zeroth.name = "zeroth_order(" + tag.str() + ")";
        zeroth.lhs = row.sup_norm;
        zeroth.rhs = (row.f_sup + row.h_sup) / row.eps + sup_tol;
        zeroth.slack = zeroth.rhs - zeroth.lhs;
        zeroth.pass = zeroth.lhs <= zeroth.rhs;
        rec.checks.push_back(zeroth);

        BoundCheck grad;
        grad.name = "gradient_l2(" + tag.str() + ")";
        grad.lhs = row.grad_l2_sq;
        grad.rhs = row.energy_rhs + grad_tol;
        grad.slack = grad.rhs - grad.lhs;
        grad.pass = grad.lhs <= grad.rhs;
        rec.checks.push_back(grad);
    }
    return rec;
}

BoundsRecord verify_apriori_bounds(const SolveReport& report, const ProblemSpec&, double eps,
                                   double sup_tol, double grad_tol) {
    if (!(eps > 0.0))
        throw InvalidInput("verify_apriori_bounds: the bounds hold at regularization eps > 0");
    std::vector<TraceRow> rows;
    for (const auto& row : report.trace)
        if (row.eps == eps) rows.push_back(row);
    if (rows.empty())
        throw InvalidInput("verify_apriori_bounds: no trace row at the requested eps");
    return verify_trace_bounds(rows, sup_tol, grad_tol);
}

BoundsRecord verify_apriori_bounds_all(const SolveReport& report, const ProblemSpec&,
                                       double sup_tol, double grad_tol) {
    return verify_trace_bounds(report.trace, sup_tol, grad_tol);
}

UniquenessRecord verify_uniqueness(const ScalarField& u_a, const ScalarField& u_b,
                                   const ProblemSpec&, double tolerance) {
    const GridSpec& ga = u_a.grid();
    const GridSpec& gb = u_b.grid();
    if (ga.radius() != gb.radius() || ga.n() != gb.n())
        throw InvalidInput("verify_uniqueness: fields must share radius and node count");

    const int n = ga.n();
    const double h2 = ga.spacing() * ga.spacing();
    ScalarField w(ga, 2.0); // delta = 0 wherever either field is pinned
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            double d = u_a(i, j) - u_b(i, j);
            w(i, j) = std::exp(d) + std::exp(-d);
        }

    UniquenessRecord rec;
    rec.tolerance = tolerance;
    double wmin = 0, wmax = 0;
    bool first = true;
    double min_lap = 0.0;
    bool any_lap = false;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (!ga.is_interior(i, j) || !gb.is_interior(i, j)) continue;
            ++rec.nodes_compared;
            if (first || w(i, j) < wmin) wmin = w(i, j);
            if (first || w(i, j) > wmax) wmax = w(i, j);
            first = false;
            if (i > 0 && i < n - 1 && j > 0 && j < n - 1) {
                double lap = (w(i - 1, j) + w(i + 1, j) + w(i, j - 1) + w(i, j + 1) - 4.0 * w(i, j)) / h2;
                if (!any_lap || lap < min_lap) min_lap = lap;
                any_lap = true;
            }
        }
    rec.oscillation = first ? 0.0 : wmax - wmin;
    rec.min_laplacian_w = min_lap;
    rec.subharmonic_ok = any_lap && min_lap >= -tolerance;
    return rec;
}

} // namespace kw
