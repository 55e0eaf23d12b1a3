#include "kwplane/scalar_field.hpp"

#include <cmath>
#include <cstdlib>

namespace kw {

ScalarField::ScalarField(GridSpec grid, double fill)
    : grid_(std::move(grid)), values_(static_cast<std::size_t>(grid_.num_nodes()), fill) {}

ScalarField::ScalarField(GridSpec grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.num_nodes())
        throw InvalidInput("ScalarField: value array length does not match the grid");
}

ScalarField ScalarField::sample(const GridSpec& grid, const std::function<double(double, double)>& f) {
    ScalarField out(grid);
    const int n = grid.n();
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            out.values_[grid.index(i, j)] = f(grid.x(i), grid.y(j));
    out.check_finite("sampled field");
    return out;
}

double ScalarField::sup_norm() const {
    double s = 0.0;
    for (double v : values_) s = std::max(s, std::abs(v));
    return s;
}

double ScalarField::sup_norm_interior() const {
    double s = 0.0;
    for (int idx : grid_.interior_nodes()) s = std::max(s, std::abs(values_[idx]));
    return s;
}

void ScalarField::check_finite(const char* what) const {
    for (double v : values_)
        if (!std::isfinite(v)) throw InvalidInput(std::string(what) + ": non-finite value");
}

void require_same_grid(const ScalarField& a, const ScalarField& b, const char* op) {
    if (a.grid() != b.grid())
        throw InvalidInput(std::string(op) + ": fields live on different grids");
}

void require_grid(const ScalarField& a, const GridSpec& g, const char* op) {
    if (a.grid() != g)
        throw InvalidInput(std::string(op) + ": field grid does not match the requested grid");
}

double bilinear_at(const ScalarField& f, double x, double y, double outside) {
    const GridSpec& g = f.grid();
    const double R = g.radius(), h = g.spacing();
    if (x < -R || x > R || y < -R || y > R) return outside;
    double fx = (x + R) / h, fy = (y + R) / h;
    int i = std::min(static_cast<int>(fx), g.n() - 2);
    int j = std::min(static_cast<int>(fy), g.n() - 2);
    double tx = fx - i, ty = fy - j;
    return (1 - tx) * (1 - ty) * f(i, j) + tx * (1 - ty) * f(i + 1, j)
         + (1 - tx) * ty * f(i, j + 1) + tx * ty * f(i + 1, j + 1);
}

} // namespace kw
