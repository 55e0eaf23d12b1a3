#include "kwplane/problem.hpp"

#include <cmath>

#include "kwplane/geometry.hpp"
#include "kwplane/quadrature.hpp"

namespace kw {

void ProblemSpec::validate_on(const GridSpec& grid) const {
    certificate.validate();
    ScalarField fs = sample_f(grid);
    ScalarField hs = sample_h(grid);
    bool h_nonzero = false;
    const double slack = 1e-12;
    for (int j = 0; j < grid.n(); ++j) {
        for (int i = 0; i < grid.n(); ++i) {
            double x = grid.x(i), y = grid.y(j);
            double bound = certificate.bound_at(x * x + y * y);
            double hv = hs(i, j), fv = fs(i, j);
            if (hv > slack)
                throw InvalidInput("ProblemSpec: h must be nonpositive everywhere");
            if (std::abs(hv) > 1e-14) h_nonzero = true;
            if (std::abs(fv) > bound * (1.0 + 1e-9) + slack)
                throw InvalidInput("ProblemSpec: |f| violates the decay certificate");
            if (std::abs(hv) > bound * (1.0 + 1e-9) + slack)
                throw InvalidInput("ProblemSpec: |h| violates the decay certificate");
        }
    }
    if (!h_nonzero)
        throw InvalidInput("ProblemSpec: h must not be identically zero");
}

double ProblemSpec::f_mass(const GridSpec& grid) const {
    ScalarField fs = sample_f(grid);
    ScalarField rho = bg.rho_on(grid);
    return quadrature(fs, rho);
}

ProblemSpec family_problem(const std::function<double(double, double)>& K,
                           const DecayCertificate& cert, double k) {
    ProblemSpec p;
    p.bg = BackgroundMetric::gk(k);
    p.f = [k](double x, double y) {
        double rsq = x * x + y * y;
        return -2.0 * k * std::pow(1.0 + rsq, -(k + 2.0));
    };
    p.h = K;
    p.certificate = cert;
    return p;
}

} // namespace kw
