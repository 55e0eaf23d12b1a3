#include "kwplane/metric.hpp"

#include <sstream>

namespace kw {

BackgroundMetric::BackgroundMetric(PowerProfile factor) : profile_(factor) {
    if (!factor.positive())
        throw InvalidInput("BackgroundMetric: conformal factor must be strictly positive");
}

BackgroundMetric::BackgroundMetric(ScalarField factor) : sampled_(std::move(factor)) {
    for (double v : sampled_->values())
        if (!(v > 0.0))
            throw InvalidInput("BackgroundMetric: sampled conformal factor must be strictly positive");
}

const PowerProfile& BackgroundMetric::profile() const {
    if (!profile_) throw InvalidInput("BackgroundMetric: not an analytic metric");
    return *profile_;
}

const ScalarField& BackgroundMetric::sampled() const {
    if (!sampled_) throw InvalidInput("BackgroundMetric: not a sampled metric");
    return *sampled_;
}

double BackgroundMetric::rho(double x, double y) const {
    if (profile_) return (*profile_)(x, y);
    throw InvalidInput("BackgroundMetric: pointwise evaluation of a sampled metric; use rho_on");
}

ScalarField BackgroundMetric::rho_on(const GridSpec& grid) const {
    if (profile_)
        return ScalarField::sample(grid, [this](double x, double y) { return (*profile_)(x, y); });
    require_grid(*sampled_, grid, "BackgroundMetric::rho_on");
    return *sampled_;
}

std::string BackgroundMetric::describe() const {
    std::ostringstream os;
    if (profile_)
        os << profile_->coefficient << "*(1+|z|^2)^" << profile_->exponent;
    else
        os << "sampled(n=" << sampled_->grid().n() << ",R=" << sampled_->grid().radius() << ")";
    return os.str();
}

} // namespace kw
