#include "kwplane/vortex.hpp"

#include <cmath>
#include <sstream>

#include "kwplane/geometry.hpp"
#include "kwplane/quadrature.hpp"

namespace kw {

ProblemSpec reduce_to_scalar(const VortexData& d, const Schedule& schedule) {
    d.certificate.validate();
    schedule.validate();

    // checks on the largest scheduled domain
    GridSpec grid(schedule.radii.back(), schedule.n, schedule.shape);
    ScalarField fk = ScalarField::sample(grid, d.curvature_K);
    ScalarField phi2 = ScalarField::sample(grid, d.section_sq);
    ScalarField lam = ScalarField::sample(grid, d.lambda);

    bool phi_nonzero = false;
    for (int j = 0; j < grid.n(); ++j)
        for (int i = 0; i < grid.n(); ++i) {
            double x = grid.x(i), y = grid.y(j);
            if (phi2(i, j) < -1e-14)
                throw InvalidInput("VortexData: |phi|^2 must be nonnegative");
            if (phi2(i, j) > 1e-14) phi_nonzero = true;
            double lhs = std::abs(fk(i, j) - 0.5 * lam(i, j)) + phi2(i, j);
            double bound = d.certificate.bound_at(x * x + y * y);
            if (lhs > bound * (1.0 + 1e-9) + 1e-12) {
                std::ostringstream os;
                os << "VortexData: decay certificate (lambda=" << d.certificate.lambda
                   << ", l=" << d.certificate.l << ") violated at (" << x << "," << y
                   << "): |iLF_K - lambda/2| + |phi|^2 = " << lhs << " > " << bound;
                throw InvalidInput(os.str());
            }
        }
    if (!phi_nonzero)
        throw InvalidInput("VortexData: |phi|^2 identically zero (h must be nonzero)");

    // sign: int (2 iLF_K - lambda) dvol < 0
    ScalarField sign_field(grid);
    for (int idx = 0; idx < sign_field.size(); ++idx)
        sign_field.values()[idx] = 2.0 * fk.at(idx) - lam.at(idx);
    ScalarField rho = d.bg.rho_on(grid);
    double mass = quadrature(sign_field, rho);
    if (!(mass < 0.0)) {
        std::ostringstream os;
        os << "VortexData: sign condition failed, int (2 iLF_K - lambda) dvol = " << mass << " >= 0";
        throw InvalidInput(os.str());
    }

    ProblemSpec p;
    auto FK = d.curvature_K;
    auto lambda = d.lambda;
    auto sect = d.section_sq;
    p.f = [FK, lambda](double x, double y) { return FK(x, y) - 0.5 * lambda(x, y); };
    p.h = [sect](double x, double y) { return -0.5 * sect(x, y); };
    p.bg = d.bg;
    p.certificate = d.certificate;
    p.validate_on(grid);
    return p;
}

VortexReport solve_vortex(const VortexData& d, const Schedule& schedule) {
    ProblemSpec p = reduce_to_scalar(d, schedule);

    VortexReport out;
    out.scalar = continue_domain(p, schedule);

    // residual of the vortex equation itself, through F_H = F_K - dbar d f:
    //   iL F_K - (1/2) rho^{-1} Delta_h f + (1/2)|phi|^2 e^f - lambda/2
    const ScalarField& f = out.scalar.solution;
    const GridSpec& grid = f.grid();
    ScalarField hl = half_laplacian(f, d.bg);
    out.vortex_residual = ScalarField(grid);
    double sup = 0.0;
    for (int j = 1; j < grid.n() - 1; ++j)
        for (int i = 1; i < grid.n() - 1; ++i) {
            if (!grid.is_interior(i, j)) continue;
            double x = grid.x(i), y = grid.y(j);
            double r = d.curvature_K(x, y) - hl(i, j) + 0.5 * d.section_sq(x, y) * std::exp(f(i, j))
                     - 0.5 * d.lambda(x, y);
            out.vortex_residual(i, j) = r;
            sup = std::max(sup, std::abs(r));
        }
    out.vortex_residual_sup = sup;
    return out;
}

} // namespace kw
