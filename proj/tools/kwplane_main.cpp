// kwplane command line: prescribed Chern scalar curvature and abelian
// vortex solves on the plane, driven by a key = value config file.
//
// Exit codes: 0 success, 1 verdict failure, 2 input error, 3 solver failure.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "kwplane/admissibility.hpp"
#include "kwplane/field_io.hpp"
#include "kwplane/geometry.hpp"
#include "kwplane/quadrature.hpp"
#include "kwplane/radial_oracle.hpp"
#include "kwplane/solver.hpp"
#include "kwplane/vortex.hpp"

namespace fs = std::filesystem;
using namespace kw;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    fs::path out = "out";
    std::map<std::string, std::pair<std::string, int>> kv; // key -> (value, line)

    bool has(const std::string& key) const { return kv.count(key) > 0; }

    std::string str(const std::string& key, const std::string& fallback = "") const {
        auto it = kv.find(key);
        return it == kv.end() ? fallback : it->second.first;
    }

    double num(const std::string& key, double fallback) const {
        auto it = kv.find(key);
        if (it == kv.end()) return fallback;
        return parse_num(it->second.first, key, it->second.second);
    }

    double require_num(const std::string& key) const {
        auto it = kv.find(key);
        if (it == kv.end()) throw ConfigError("config: missing required key '" + key + "'");
        return parse_num(it->second.first, key, it->second.second);
    }

    bool flag(const std::string& key, bool fallback) const {
        auto it = kv.find(key);
        if (it == kv.end()) return fallback;
        const std::string& v = it->second.first;
        if (v == "true" || v == "1" || v == "yes") return true;
        if (v == "false" || v == "0" || v == "no") return false;
        throw ConfigError("line " + std::to_string(it->second.second) + ": key '" + key +
                          "' expects true/false, got '" + v + "'");
    }

    std::vector<double> num_list(const std::string& key) const {
        std::vector<double> out;
        auto it = kv.find(key);
        if (it == kv.end()) return out;
        std::stringstream ss(it->second.first);
        std::string item;
        while (std::getline(ss, item, ','))
            out.push_back(parse_num(item, key, it->second.second));
        return out;
    }

    static double parse_num(const std::string& text, const std::string& key, int line) {
        try {
            std::size_t pos = 0;
            double v = std::stod(text, &pos);
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos != text.size()) throw std::invalid_argument("trailing");
            return v;
        } catch (const std::exception&) {
            throw ConfigError("line " + std::to_string(line) + ": malformed number for key '" +
                              key + "': '" + text + "'");
        }
    }
};

const std::map<std::string, std::set<std::string>> kCommandKeys = {
    {"solve",
     {"f_coeff", "f_power", "h_coeff", "h_power", "f_file", "h_file", "bg_k", "lambda", "l",
      "radius", "radii", "n", "shape", "eps_min", "tau", "tol_newton", "tol_continuation",
      "sup_cap", "polish", "out"}},
    {"family",
     {"ks", "K_coeff", "K_power", "lambda", "l", "fit_lo", "fit_hi", "radius", "radii", "n",
      "shape", "eps_min", "tau", "tol_newton", "tol_continuation", "sup_cap", "polish", "out"}},
    {"vortex",
     {"fk_coeff", "fk_power", "phisq_coeff", "phisq_power", "lambda_target", "bg_k", "lambda",
      "l", "radius", "radii", "n", "shape", "eps_min", "tau", "tol_newton", "tol_continuation",
      "sup_cap", "polish", "out"}},
    {"oracle", {"k", "K_coeff", "K_power", "radius", "m", "eps", "stretch", "fit_lo", "fit_hi", "out"}},
    {"admissible", {"l", "lambda", "k", "phi_power", "psi_power", "out"}},
    {"verify", {"report", "sup_tol", "grad_tol", "out"}},
};

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto trim = [](const std::string& s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string stripped = trim(line);
        if (stripped.empty()) continue;
        auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        if (key == "command") {
            cfg.command = value;
            continue;
        }
        if (cfg.kv.count(key))
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        cfg.kv[key] = {value, lineno};
    }
    if (cfg.command.empty()) throw ConfigError("command required");
    auto it = kCommandKeys.find(cfg.command);
    if (it == kCommandKeys.end())
        throw ConfigError("unknown command '" + cfg.command +
                          "' (expected solve, family, vortex, verify, oracle or admissible)");
    for (const auto& [key, val] : cfg.kv)
        if (!it->second.count(key))
            throw ConfigError("line " + std::to_string(val.second) + ": unknown key '" + key +
                              "' for command '" + cfg.command + "'");
    // early validation of the grid size, the classic mistake
    if (cfg.has("n")) {
        double n = cfg.require_num("n");
        if (n != std::floor(n) || static_cast<int>(n) % 2 == 0 || n < 5)
            throw ConfigError("line " + std::to_string(cfg.kv.at("n").second) +
                              ": grid nodes must be odd and at least 5");
    }
    if (cfg.has("out")) cfg.out = cfg.str("out");
    return cfg;
}

std::vector<double> eps_ladder_to(double eps_min) {
    std::vector<double> eps;
    double e = 1.0;
    while (true) {
        eps.push_back(e);
        if (e <= eps_min * (1.0 + 1e-12)) break;
        e *= 0.5;
        if (e < 1e-18) break;
    }
    return eps;
}

Schedule schedule_from(const RunConfig& cfg, const Schedule& base) {
    Schedule s = base;
    if (cfg.has("radii")) {
        s.radii = cfg.num_list("radii");
    } else if (cfg.has("radius")) {
        s.radii = {cfg.require_num("radius")};
    }
    if (cfg.has("n")) s.n = static_cast<int>(cfg.require_num("n"));
    if (cfg.has("shape")) {
        std::string shape = cfg.str("shape");
        if (shape == "square")
            s.shape = GridShape::square;
        else if (shape == "disk")
            s.shape = GridShape::disk;
        else
            throw ConfigError("shape must be 'square' or 'disk', got '" + shape + "'");
    }
    if (cfg.has("eps_min")) s.epsilons = eps_ladder_to(cfg.require_num("eps_min"));
    s.time_step = cfg.num("tau", s.time_step);
    s.tol_newton = cfg.num("tol_newton", s.tol_newton);
    s.tol_continuation = cfg.num("tol_continuation", s.tol_continuation);
    s.sup_cap = cfg.num("sup_cap", s.sup_cap);
    s.polish_eps_zero = cfg.flag("polish", s.polish_eps_zero);
    s.validate();
    return s;
}

void write_trace(Report& rep, const std::vector<TraceRow>& trace) {
    rep.set("trace.rows", static_cast<int>(trace.size()));
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const TraceRow& row = trace[i];
        std::string p = "trace." + std::to_string(i) + ".";
        rep.set(p + "radius", row.radius);
        rep.set(p + "n", row.n);
        rep.set(p + "eps", row.eps);
        rep.set(p + "newton_iters", row.newton_iters);
        rep.set(p + "flow_steps", row.flow_steps);
        rep.set(p + "residual", row.residual);
        rep.set(p + "sup_norm", row.sup_norm);
        rep.set(p + "grad_l2_sq", row.grad_l2_sq);
        rep.set(p + "energy_rhs", row.energy_rhs);
        rep.set(p + "f_sup", row.f_sup);
        rep.set(p + "h_sup", row.h_sup);
    }
}

void write_bounds(Report& rep, const BoundsRecord& rec, const std::string& prefix) {
    rep.set(prefix + ".checks", static_cast<int>(rec.checks.size()));
    rep.set(prefix + ".all_pass", rec.all_pass());
    for (std::size_t i = 0; i < rec.checks.size(); ++i) {
        const BoundCheck& c = rec.checks[i];
        std::string p = prefix + "." + std::to_string(i) + ".";
        rep.set(p + "name", c.name);
        rep.set(p + "pass", c.pass);
        rep.set(p + "lhs", c.lhs);
        rep.set(p + "rhs", c.rhs);
        rep.set(p + "slack", c.slack);
    }
}

void write_solve_summary(Report& rep, const SolveReport& sr) {
    rep.set("final_residual", sr.final_residual);
    rep.set("sup_norm", sr.solution.sup_norm());
    rep.set("eps_converged", sr.eps_converged);
    rep.set("domain_converged", sr.domain_converged);
    rep.set("last_cauchy_diff", sr.last_cauchy_diff);
    rep.set("last_domain_drift", sr.last_domain_drift);
    for (std::size_t i = 0; i < sr.domain_drifts.size(); ++i)
        rep.set("domain_drift." + std::to_string(i), sr.domain_drifts[i]);
}

// certificate wide enough for the given data on the largest grid, used
// when the config does not pin (lambda, l)
DecayCertificate fit_certificate(const RunConfig& cfg, const Schedule& s,
                                 const std::function<double(double, double)>& f,
                                 const std::function<double(double, double)>& h) {
    double l = cfg.num("l", 2.0);
    if (cfg.has("lambda")) return DecayCertificate{cfg.require_num("lambda"), l};
    GridSpec grid(s.radii.back(), s.n, s.shape);
    double lam = 0.0;
    for (int j = 0; j < grid.n(); ++j)
        for (int i = 0; i < grid.n(); ++i) {
            double x = grid.x(i), y = grid.y(j);
            double w = std::pow(1.0 + x * x + y * y, l);
            lam = std::max({lam, std::abs(f(x, y)) * w, std::abs(h(x, y)) * w});
        }
    return DecayCertificate{lam * (1.0 + 1e-6) + 1e-300, l};
}

int run_solve(const RunConfig& cfg) {
    Schedule s = schedule_from(cfg, Schedule{});
    ProblemSpec p;
    if (cfg.has("f_file") || cfg.has("h_file")) {
        // sampled data path: single grid, declared by radius/n/shape
        GridSpec grid(s.radii.back(), s.n, s.shape);
        if (s.radii.size() != 1)
            throw ConfigError("sampled-field runs use a single radius (set 'radius', not 'radii')");
        ScalarField fs = cfg.has("f_file")
                             ? read_field_csv(cfg.str("f_file"), grid)
                             : ScalarField::sample(grid, [&](double x, double y) {
                                   return cfg.num("f_coeff", -1.0) *
                                          std::pow(1.0 + x * x + y * y, cfg.num("f_power", 0.0));
                               });
        ScalarField hs = cfg.has("h_file")
                             ? read_field_csv(cfg.str("h_file"), grid)
                             : ScalarField::sample(grid, [&](double x, double y) {
                                   return cfg.num("h_coeff", -1.0) *
                                          std::pow(1.0 + x * x + y * y, cfg.num("h_power", 0.0));
                               });
        p.f = [fs, grid](double x, double y) { return bilinear_at(fs, x, y); };
        p.h = [hs, grid](double x, double y) { return bilinear_at(hs, x, y); };
    } else {
        double fc = cfg.num("f_coeff", -1.0), fp = cfg.num("f_power", 0.0);
        double hc = cfg.num("h_coeff", -1.0), hp = cfg.num("h_power", 0.0);
        p.f = [fc, fp](double x, double y) { return fc * std::pow(1.0 + x * x + y * y, fp); };
        p.h = [hc, hp](double x, double y) { return hc * std::pow(1.0 + x * x + y * y, hp); };
    }
    p.bg = BackgroundMetric::gk(cfg.num("bg_k", 0.0));
    p.certificate = fit_certificate(cfg, s, p.f, p.h);

    SolveReport sr = continue_domain(p, s);
    BoundsRecord bounds = verify_apriori_bounds_all(sr, p);

    fs::create_directories(cfg.out);
    write_field_csv(cfg.out / "solution.csv", sr.solution);
    Report rep;
    rep.set("command", std::string("solve"));
    rep.set("bg_k", cfg.num("bg_k", 0.0));
    rep.set("cert_lambda", p.certificate.lambda);
    rep.set("cert_l", p.certificate.l);
    rep.set("sign_condition_ok", p.check_sign_condition(sr.solution.grid()));
    write_solve_summary(rep, sr);
    write_trace(rep, sr.trace);
    write_bounds(rep, bounds, "bounds");
    rep.set("verdict", bounds.all_pass() ? std::string("pass") : std::string("fail"));
    rep.write(cfg.out / "report.txt");
    return bounds.all_pass() ? 0 : 1;
}

int run_family(const RunConfig& cfg) {
    Schedule s = schedule_from(cfg, Schedule::family_defaults());
    double l = cfg.require_num("l");
    double lambda = cfg.require_num("lambda");
    std::vector<double> ks = cfg.num_list("ks");
    if (ks.empty()) throw ConfigError("config: missing required key 'ks'");
    double Kc = cfg.num("K_coeff", -1.0);
    double Kp = cfg.num("K_power", -l);
    if (Kc > 0.0) throw ConfigError("K_coeff must be nonpositive (K <= 0)");
    auto K = [Kc, Kp](double x, double y) { return Kc * std::pow(1.0 + x * x + y * y, Kp); };
    DecayCertificate cert{lambda, l};

    auto members = solve_family(K, cert, ks, s);

    fs::create_directories(cfg.out);
    Report rep;
    rep.set("command", std::string("family"));
    rep.set("l", l);
    rep.set("lambda", lambda);
    Window w = admissible_k(l, lambda);
    rep.set("window.lo", w.lo);
    rep.set("window.hi", w.hi);
    rep.set("window.lo_closed", w.lo_closed);
    rep.set("window.hi_closed", w.hi_closed);
    rep.set("members", static_cast<int>(members.size()));

    double rmax = s.radii.back();
    double fit_lo = cfg.num("fit_lo", 10.0);
    double fit_hi = cfg.num("fit_hi", std::min(18.0, 0.9 * rmax));
    bool all_ok = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const FamilyMember& mem = members[i];
        std::ostringstream kv;
        kv << mem.k;
        write_field_csv(cfg.out / ("member_k" + kv.str() + "_v.csv"), mem.report.solution);
        write_field_csv(cfg.out / ("member_k" + kv.str() + "_u.csv"), mem.u);
        std::string p = "member." + std::to_string(i) + ".";
        rep.set(p + "k", mem.k);
        rep.set(p + "sup_v", mem.report.solution.sup_norm());
        rep.set(p + "final_residual", mem.report.final_residual);
        rep.set(p + "domain_converged", mem.report.domain_converged);
        rep.set(p + "last_domain_drift", mem.report.last_domain_drift);
        for (std::size_t dI = 0; dI < mem.report.domain_drifts.size(); ++dI)
            rep.set(p + "domain_drift." + std::to_string(dI), mem.report.domain_drifts[dI]);

        // growth of u_k along the positive x-axis
        const GridSpec& g = mem.u.grid();
        RadialProfile ray;
        for (int ix = (g.n() - 1) / 2; ix < g.n(); ++ix) {
            ray.r.push_back(g.x(ix));
            ray.v.push_back(mem.u(ix, (g.n() - 1) / 2));
        }
        if (fit_lo >= 5.0 && fit_hi > fit_lo && fit_hi <= rmax) {
            GrowthFit fit = growth_fit(ray, mem.k, fit_lo, fit_hi);
            rep.set(p + "growth_slope", fit.slope);
            rep.set(p + "growth_intercept", fit.intercept);
            rep.set(p + "growth_max_dev", fit.max_dev);
            if (std::abs(fit.slope - mem.k) > 0.05 * mem.k) all_ok = false;
        }
        BoundsRecord bounds = verify_trace_bounds(mem.report.trace);
        write_bounds(rep, bounds, "member." + std::to_string(i) + ".bounds");
        if (!bounds.all_pass()) all_ok = false;
    }
    rep.set("verdict", all_ok ? std::string("pass") : std::string("fail"));
    rep.write(cfg.out / "report.txt");
    return all_ok ? 0 : 1;
}

int run_vortex(const RunConfig& cfg) {
    Schedule s = schedule_from(cfg, Schedule{});
    VortexData d;
    double fkc = cfg.num("fk_coeff", -1.0), fkp = cfg.num("fk_power", 0.0);
    double phc = cfg.num("phisq_coeff", 1.0), php = cfg.num("phisq_power", 0.0);
    double lam_t = cfg.num("lambda_target", 0.0);
    d.curvature_K = [fkc, fkp](double x, double y) {
        return fkc * std::pow(1.0 + x * x + y * y, fkp);
    };
    d.section_sq = [phc, php](double x, double y) {
        return phc * std::pow(1.0 + x * x + y * y, php);
    };
    d.lambda = [lam_t](double, double) { return lam_t; };
    d.bg = BackgroundMetric::gk(cfg.num("bg_k", 0.0));
    auto combined = [&](double x, double y) {
        return std::abs(d.curvature_K(x, y) - 0.5 * lam_t) + d.section_sq(x, y);
    };
    d.certificate = fit_certificate(cfg, s, combined, [](double, double) { return 0.0; });

    VortexReport vr = solve_vortex(d, s);
    BoundsRecord bounds = verify_trace_bounds(vr.scalar.trace);

    fs::create_directories(cfg.out);
    write_field_csv(cfg.out / "solution.csv", vr.scalar.solution);
    write_field_csv(cfg.out / "residual.csv", vr.vortex_residual);
    Report rep;
    rep.set("command", std::string("vortex"));
    rep.set("vortex_residual_sup", vr.vortex_residual_sup);
    write_solve_summary(rep, vr.scalar);
    write_trace(rep, vr.scalar.trace);
    write_bounds(rep, bounds, "bounds");
    bool ok = bounds.all_pass();
    rep.set("verdict", ok ? std::string("pass") : std::string("fail"));
    rep.write(cfg.out / "report.txt");
    return ok ? 0 : 1;
}

int run_oracle(const RunConfig& cfg) {
    double k = cfg.require_num("k");
    double R = cfg.num("radius", 20.0);
    int m = static_cast<int>(cfg.num("m", 2001));
    PowerProfile K{cfg.num("K_coeff", -1.0), cfg.num("K_power", -(k + 2.0))};
    RadialProfile p = solve_radial(K, k, R, m, cfg.num("stretch", 1.0), cfg.num("eps", 0.0));

    fs::create_directories(cfg.out);
    write_radial_csv(cfg.out / "profile.csv", p);
    Report rep;
    rep.set("command", std::string("oracle"));
    rep.set("k", k);
    rep.set("radius", R);
    rep.set("m", m);
    rep.set("sup_v", p.sup_norm());
    if (cfg.has("fit_lo") && cfg.has("fit_hi")) {
        // fit of u = (v + k log(1+r^2))/2 against log r
        RadialProfile u = p;
        for (std::size_t i = 0; i < u.r.size(); ++i)
            u.v[i] = 0.5 * (p.v[i] + k * std::log1p(u.r[i] * u.r[i]));
        GrowthFit fit = growth_fit(u, k, cfg.require_num("fit_lo"), cfg.require_num("fit_hi"));
        rep.set("growth_slope", fit.slope);
        rep.set("growth_intercept", fit.intercept);
        rep.set("growth_max_dev", fit.max_dev);
    }
    rep.write(cfg.out / "report.txt");
    return 0;
}

int run_admissible(const RunConfig& cfg) {
    double l = cfg.require_num("l");
    double lambda = cfg.require_num("lambda");
    Window w = admissible_k(l, lambda);

    fs::create_directories(cfg.out);
    Report rep;
    rep.set("command", std::string("admissible"));
    rep.set("l", l);
    rep.set("lambda", lambda);
    rep.set("window.empty", w.empty);
    if (w.empty) {
        rep.set("window", std::string("empty"));
    } else {
        std::ostringstream os;
        os << (w.lo_closed ? "[" : "(") << format_real(w.lo) << ", " << format_real(w.hi)
           << (w.hi_closed ? "]" : ")");
        rep.set("window", os.str());
        rep.set("window.lo", w.lo);
        rep.set("window.hi", w.hi);
        rep.set("window.lo_closed", w.lo_closed);
        rep.set("window.hi_closed", w.hi_closed);
    }
    if (cfg.has("k")) {
        double k = cfg.require_num("k");
        AdmissibilityQuery q{PowerProfile{1.0, -2.0}, PowerProfile{1.0, cfg.num("phi_power", -1.0)},
                             PowerProfile{1.0, cfg.num("psi_power", -l)}, k};
        rep.set("k", k);
        rep.set("k_in_window", w.contains(k));
        rep.set("linfty_ok", check_linfty(q));
        Window qw = q_window(q);
        rep.set("q_window.empty", qw.empty);
        if (!qw.empty) {
            rep.set("q_window.lo", qw.lo);
            rep.set("q_window.hi", qw.hi);
        }
        if (k > 0.0) rep.set("curvature_bound_ok", check_curvature_bound(k, l, lambda));
    }
    rep.write(cfg.out / "report.txt");
    return 0; // a verdict, not a failure
}

int run_verify(const RunConfig& cfg) {
    fs::path path = cfg.str("report");
    if (path.empty()) throw ConfigError("config: missing required key 'report'");
    Report saved = Report::read(path);
    if (!saved.has("trace.rows"))
        throw ConfigError("report has no continuation trace to verify: " + path.string());
    int rows = static_cast<int>(saved.get_double("trace.rows"));
    std::vector<TraceRow> trace;
    for (int i = 0; i < rows; ++i) {
        std::string p = "trace." + std::to_string(i) + ".";
        TraceRow row;
        row.radius = saved.get_double(p + "radius");
        row.n = static_cast<int>(saved.get_double(p + "n"));
        row.eps = saved.get_double(p + "eps");
        row.residual = saved.get_double(p + "residual");
        row.sup_norm = saved.get_double(p + "sup_norm");
        row.grad_l2_sq = saved.get_double(p + "grad_l2_sq");
        row.energy_rhs = saved.get_double(p + "energy_rhs");
        row.f_sup = saved.get_double(p + "f_sup");
        row.h_sup = saved.get_double(p + "h_sup");
        trace.push_back(row);
    }
    BoundsRecord rec = verify_trace_bounds(trace, cfg.num("sup_tol", 1e-8), cfg.num("grad_tol", 1e-6));

    fs::create_directories(cfg.out);
    Report rep;
    rep.set("command", std::string("verify"));
    rep.set("source", path.string());
    write_bounds(rep, rec, "bounds");
    rep.set("verdict", rec.all_pass() ? std::string("pass") : std::string("fail"));
    rep.write(cfg.out / "report.txt");
    return rec.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kazdan-Warner prescribed-curvature and vortex solver on the plane"};
    std::string config_path;
    std::string out_override;
    double n_override = 0, radius_override = 0, eps_min_override = 0, tol_override = 0;
    app.add_option("--config", config_path, "config file (key = value lines, # comments)")
        ->required();
    app.add_option("--out", out_override, "output directory (default ./out)");
    app.add_option("--n", n_override, "override grid nodes per axis (odd)");
    app.add_option("--radius", radius_override, "override domain radius (single-domain run)");
    app.add_option("--eps-min", eps_min_override, "override the epsilon ladder floor");
    app.add_option("--tol", tol_override, "override the Newton residual tolerance");
    CLI11_PARSE(app, argc, argv);

    try {
        std::ifstream is(config_path);
        if (!is) {
            std::cerr << "error: cannot open config " << config_path << "\n";
            return 2;
        }
        std::stringstream buf;
        buf << is.rdbuf();
        RunConfig cfg = parse_config(buf.str());
        auto push = [&cfg](const std::string& k, const std::string& v) { cfg.kv[k] = {v, 0}; };
        if (!out_override.empty()) cfg.out = out_override;
        if (n_override > 0) push("n", std::to_string(static_cast<int>(n_override)));
        if (radius_override > 0) {
            push("radius", std::to_string(radius_override));
            cfg.kv.erase("radii");
        }
        if (eps_min_override > 0) push("eps_min", format_real(eps_min_override));
        if (tol_override > 0) push("tol_newton", format_real(tol_override));
        if (cfg.has("n")) {
            double n = cfg.require_num("n");
            if (n != std::floor(n) || static_cast<int>(n) % 2 == 0 || n < 5)
                throw ConfigError("grid nodes must be odd and at least 5");
        }

        if (cfg.command == "solve") return run_solve(cfg);
        if (cfg.command == "family") return run_family(cfg);
        if (cfg.command == "vortex") return run_vortex(cfg);
        if (cfg.command == "oracle") return run_oracle(cfg);
        if (cfg.command == "admissible") return run_admissible(cfg);
        if (cfg.command == "verify") return run_verify(cfg);
        std::cerr << "error: unknown command " << cfg.command << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SolveError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
