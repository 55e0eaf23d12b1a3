#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "kwplane/grid.hpp"

namespace kw {

/// Real-valued function sampled on a GridSpec, row-major. Masked (disk)
/// nodes carry the value 0. All values must stay finite.
class ScalarField {
public:
    ScalarField() = default;
    ScalarField(GridSpec grid, double fill = 0.0);
    ScalarField(GridSpec grid, std::vector<double> values);

    static ScalarField sample(const GridSpec& grid, const std::function<double(double, double)>& f);

    const GridSpec& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    double operator()(int i, int j) const { return values_[grid_.index(i, j)]; }
    double& operator()(int i, int j) { return values_[grid_.index(i, j)]; }
    double at(int idx) const { return values_[idx]; }

    int size() const { return static_cast<int>(values_.size()); }

    double sup_norm() const;
    /// Sup over interior nodes only.
    double sup_norm_interior() const;

    /// Optional tag naming the background metric the field lives on.
    const std::string& background_tag() const { return background_tag_; }
    void set_background_tag(std::string tag) { background_tag_ = std::move(tag); }

    void check_finite(const char* what) const;

private:
    GridSpec grid_{1.0, 5, GridShape::square};
    std::vector<double> values_;
    std::string background_tag_;
};

/// Throws InvalidInput unless both fields live on the same grid.
void require_same_grid(const ScalarField& a, const ScalarField& b, const char* op);
void require_grid(const ScalarField& a, const GridSpec& g, const char* op);

/// Bilinear interpolation; `outside` fills queries beyond the grid domain
/// (zero-extension for continuation warm starts).
double bilinear_at(const ScalarField& f, double x, double y, double outside = 0.0);

} // namespace kw
