#include "kwplane/radial_oracle.hpp"

#include <algorithm>
#include <cmath>

#include "kwplane/errors.hpp"

namespace kw {

double RadialProfile::sup_norm() const {
    double s = 0.0;
    for (double x : v) s = std::max(s, std::abs(x));
    return s;
}

double RadialProfile::at(double radius) const {
    if (radius <= r.front()) return v.front();
    if (radius >= r.back()) return v.back();
    auto it = std::upper_bound(r.begin(), r.end(), radius);
    std::size_t i = static_cast<std::size_t>(it - r.begin());
    double t = (radius - r[i - 1]) / (r[i] - r[i - 1]);
    return (1.0 - t) * v[i - 1] + t * v[i];
}

namespace {

std::vector<double> build_mesh(double R, int m, double stretch) {
    std::vector<double> r(m);
    if (stretch == 1.0) {
        double h = R / (m - 1);
        for (int i = 0; i < m; ++i) r[i] = h * i;
        r[m - 1] = R;
        return r;
    }
    // geometric spacing h_i = h0 * stretch^i summing to R
    double scale = (std::pow(stretch, m - 1) - 1.0) / (stretch - 1.0);
    double h0 = R / scale;
    r[0] = 0.0;
    double h = h0;
    for (int i = 1; i < m; ++i) {
        r[i] = r[i - 1] + h;
        h *= stretch;
    }
    r[m - 1] = R;
    return r;
}

// Thomas algorithm; a = sub, b = diag, c = super (a[0], c[m-1] unused)
void tridiag_solve(std::vector<double>& a, std::vector<double>& b, std::vector<double>& c,
                   std::vector<double>& rhs) {
    const std::size_t m = b.size();
    for (std::size_t i = 1; i < m; ++i) {
        double w = a[i] / b[i - 1];
        b[i] -= w * c[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    rhs[m - 1] /= b[m - 1];
    for (std::size_t i = m - 1; i-- > 0;) rhs[i] = (rhs[i] - c[i] * rhs[i + 1]) / b[i];
}

RadialProfile solve_on_mesh(const std::function<double(double)>& h_of_r,
                            const std::function<double(double)>& f_of_r, double k, double R, int m,
                            double stretch, double eps) {
    if (m < 100) throw InvalidInput("solve_radial: need at least 100 mesh points");
    if (!(R > 0.0)) throw InvalidInput("solve_radial: R must be positive");
    if (!(stretch >= 1.0)) throw InvalidInput("solve_radial: stretch must be >= 1");

    RadialProfile p;
    p.r = build_mesh(R, m, stretch);
    p.v.assign(m, 0.0);
    const auto& r = p.r;

    std::vector<double> rho_inv(m), hv(m), fv(m);
    for (int i = 0; i < m; ++i) {
        rho_inv[i] = std::pow(1.0 + r[i] * r[i], -k);
        hv[i] = h_of_r(r[i]);
        fv[i] = f_of_r(r[i]);
        if (hv[i] > 1e-14) throw InvalidInput("solve_radial: K must be nonpositive");
    }

    auto residual = [&](const std::vector<double>& v, std::vector<double>& F) {
        // origin: v'/r -> v''(0), so the operator is rho^{-1} v''(0);
        // reflection stencil v''(0) = 2 (v1 - v0) / h0^2
        double h0 = r[1] - r[0];
        F[0] = rho_inv[0] * 2.0 * (v[1] - v[0]) / (h0 * h0) + hv[0] * std::exp(v[0]) - fv[0] - eps * v[0];
        double sup = std::abs(F[0]);
        for (int i = 1; i < m - 1; ++i) {
            double hm = r[i] - r[i - 1], hp = r[i + 1] - r[i];
            double vpp = 2.0 * (v[i - 1] / (hm * (hm + hp)) - v[i] / (hm * hp) + v[i + 1] / (hp * (hm + hp)));
            double vp = -hp / (hm * (hm + hp)) * v[i - 1] + (hp - hm) / (hm * hp) * v[i]
                      + hm / (hp * (hm + hp)) * v[i + 1];
            F[i] = 0.5 * rho_inv[i] * (vpp + vp / r[i]) + hv[i] * std::exp(v[i]) - fv[i] - eps * v[i];
            sup = std::max(sup, std::abs(F[i]));
        }
        F[m - 1] = 0.0; // Dirichlet row
        return sup;
    };

    const double tol = 1e-12;
    const int max_newton = 100;
    bool at_roundoff_floor = false;
    std::vector<double> F(m), Ft(m), sub(m), diag(m), sup(m), rhs(m), trial(m);
    double res = residual(p.v, F);
    for (int it = 0; it < max_newton && res > tol && !at_roundoff_floor; ++it) {
        double h0 = r[1] - r[0];
        diag[0] = -rho_inv[0] * 2.0 / (h0 * h0) + hv[0] * std::exp(p.v[0]) - eps;
        sup[0] = rho_inv[0] * 2.0 / (h0 * h0);
        for (int i = 1; i < m - 1; ++i) {
            double hm = r[i] - r[i - 1], hp = r[i + 1] - r[i];
            double c = 0.5 * rho_inv[i];
            sub[i] = c * (2.0 / (hm * (hm + hp)) - hp / (hm * (hm + hp)) / r[i]);
            diag[i] = c * (-2.0 / (hm * hp) + (hp - hm) / (hm * hp) / r[i]) + hv[i] * std::exp(p.v[i]) - eps;
            sup[i] = c * (2.0 / (hp * (hm + hp)) + hm / (hp * (hm + hp)) / r[i]);
        }
        sub[m - 1] = 0.0;
        diag[m - 1] = 1.0;
        for (int i = 0; i < m; ++i) rhs[i] = -F[i];
        rhs[m - 1] = 0.0;
        std::vector<double> a = sub, b = diag, c = sup;
        tridiag_solve(a, b, c, rhs);

        double t = 1.0;
        for (int halvings = 0;; ++halvings) {
            for (int i = 0; i < m; ++i) trial[i] = p.v[i] + t * rhs[i];
            trial[m - 1] = 0.0;
            double res_t = residual(trial, Ft);
            if (std::isfinite(res_t) && res_t < res) {
                p.v.swap(trial);
                F.swap(Ft);
                res = res_t;
                break;
            }
            if (halvings >= 40) {
                // fine meshes bottom out on stencil cancellation noise
                // (~eps_mach * |v| / h^2) above the nominal tolerance
                if (res <= 1e-9) {
                    at_roundoff_floor = true;
                    break;
                }
                throw SolveError("radial Newton diverged", res);
            }
            t *= 0.5;
        }
    }
    if (res > tol && !at_roundoff_floor)
        throw SolveError("radial Newton did not reach tolerance", res);
    return p;
}

std::function<double(double)> curvature_rhs(double k) {
    return [k](double r) { return -2.0 * k * std::pow(1.0 + r * r, -(k + 2.0)); };
}

} // namespace

RadialProfile solve_radial(const PowerProfile& K, double k, double R, int m, double stretch,
                           double eps) {
    if (K.coefficient > 0.0) throw InvalidInput("solve_radial: K must be nonpositive");
    auto K_of_r = [K](double r) { return K.at_rsq(r * r); };
    return solve_on_mesh(K_of_r, curvature_rhs(k), k, R, m, stretch, eps);
}

RadialProfile solve_radial_fn(const std::function<double(double)>& K_of_r, double k, double R,
                              int m, double stretch, double eps) {
    return solve_on_mesh(K_of_r, curvature_rhs(k), k, R, m, stretch, eps);
}

RadialProfile solve_radial_general(const std::function<double(double)>& h_of_r,
                                   const std::function<double(double)>& f_of_r, double k, double R,
                                   int m, double stretch, double eps) {
    return solve_on_mesh(h_of_r, f_of_r, k, R, m, stretch, eps);
}

GrowthFit growth_fit(const RadialProfile& p, double k_expected, double r_lo, double r_hi) {
    if (!(r_lo >= 5.0)) throw InvalidInput("growth_fit: window must start at r >= 5");
    if (!(r_hi > r_lo)) throw InvalidInput("growth_fit: empty window");
    if (p.r.empty() || r_hi > p.r.back() * (1.0 + 1e-12))
        throw InvalidInput("growth_fit: window extends past the mesh");

    GrowthFit fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < p.r.size(); ++i) {
        if (p.r[i] < r_lo || p.r[i] > r_hi) continue;
        double x = std::log(p.r[i]);
        double y = p.v[i];
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        fit.max_dev = std::max(fit.max_dev, std::abs(y - k_expected * x));
        ++fit.nodes;
    }
    if (fit.nodes < 10) throw InvalidInput("growth_fit: window too narrow (fewer than 10 nodes)");
    double denom = fit.nodes * sxx - sx * sx;
    fit.slope = (fit.nodes * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / fit.nodes;
    return fit;
}

} // namespace kw
