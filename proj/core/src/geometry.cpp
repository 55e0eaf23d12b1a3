#include "kwplane/geometry.hpp"

#include <cmath>

namespace kw {

ScalarField half_laplacian(const ScalarField& u, const BackgroundMetric& bg) {
    const GridSpec& g = u.grid();
    ScalarField rho = bg.rho_on(g);
    ScalarField out = u; // boundary values passed through
    const int n = g.n();
    const double h2 = g.spacing() * g.spacing();
    for (int j = 1; j < n - 1; ++j) {
        for (int i = 1; i < n - 1; ++i) {
            if (!g.is_interior(i, j)) continue;
            double lap = (u(i - 1, j) + u(i + 1, j) + u(i, j - 1) + u(i, j + 1) - 4.0 * u(i, j)) / h2;
            out(i, j) = 0.5 * lap / rho(i, j);
        }
    }
    return out;
}

double chern_scalar_curvature_at(const BackgroundMetric& bg, double x, double y) {
    const PowerProfile& p = bg.profile();
    double rsq = x * x + y * y;
    // S = -(1/2) rho^{-1} Delta log rho with Delta log rho = 4 beta (1+r^2)^{-2}
    return -0.5 * laplacian_log_profile(p, rsq) / p.at_rsq(rsq);
}

ScalarField chern_scalar_curvature(const BackgroundMetric& bg, const GridSpec& grid) {
    if (bg.analytic()) {
        return ScalarField::sample(grid, [&bg](double x, double y) {
            return chern_scalar_curvature_at(bg, x, y);
        });
    }
    const ScalarField& rho = bg.sampled();
    require_grid(rho, grid, "chern_scalar_curvature");
    ScalarField logrho(grid);
    for (int idx = 0; idx < rho.size(); ++idx) logrho.values()[idx] = std::log(rho.at(idx));
    ScalarField out(grid);
    const int n = grid.n();
    const double h2 = grid.spacing() * grid.spacing();
    for (int j = 1; j < n - 1; ++j) {
        for (int i = 1; i < n - 1; ++i) {
            if (!grid.is_interior(i, j)) continue;
            double lap = (logrho(i - 1, j) + logrho(i + 1, j) + logrho(i, j - 1) + logrho(i, j + 1)
                          - 4.0 * logrho(i, j)) / h2;
            out(i, j) = -0.5 * lap / rho(i, j);
        }
    }
    return out;
}

ScalarField conformal_change_curvature(const ScalarField& u, const BackgroundMetric& bg) {
    const GridSpec& g = u.grid();
    ScalarField s = chern_scalar_curvature(bg, g);
    ScalarField hl = half_laplacian(u, bg);
    ScalarField out(g);
    for (int j = 0; j < g.n(); ++j) {
        for (int i = 0; i < g.n(); ++i) {
            double lap_term = g.is_interior(i, j) ? hl(i, j) : 0.0;
            out(i, j) = std::exp(-u(i, j)) * (s(i, j) - lap_term);
        }
    }
    return out;
}

ScalarField dirichlet_laplacian_apply(const ScalarField& u, const GridSpec& grid) {
    require_grid(u, grid, "dirichlet_laplacian_apply");
    ScalarField out(grid);
    const int n = grid.n();
    const double h2 = grid.spacing() * grid.spacing();
    auto val = [&](int i, int j) { return grid.is_interior(i, j) ? u(i, j) : 0.0; };
    for (int j = 1; j < n - 1; ++j) {
        for (int i = 1; i < n - 1; ++i) {
            if (!grid.is_interior(i, j)) continue;
            out(i, j) = (val(i - 1, j) + val(i + 1, j) + val(i, j - 1) + val(i, j + 1) - 4.0 * u(i, j)) / h2;
        }
    }
    return out;
}

} // namespace kw
