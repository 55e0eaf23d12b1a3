#include "kwplane/grid.hpp"

#include <cmath>
#include <string>

namespace kw {

GridSpec::GridSpec(double radius, int n, GridShape shape)
    : radius_(radius), n_(n), shape_(shape) {
    if (!(radius > 0.0))
        throw InvalidInput("GridSpec: radius must be positive, got " + std::to_string(radius));
    if (n < 5)
        throw InvalidInput("GridSpec: need at least 5 nodes per axis, got " + std::to_string(n));
    if (n % 2 == 0)
        throw InvalidInput("grid nodes must be odd (z = 0 must be a node), got " + std::to_string(n));
    spacing_ = 2.0 * radius / (n - 1);

    interior_.assign(static_cast<std::size_t>(n) * n, 0);
    interior_rank_.assign(static_cast<std::size_t>(n) * n, -1);
    const double r2 = radius * radius;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            bool edge = (i == 0 || j == 0 || i == n - 1 || j == n - 1);
            bool masked = false;
            if (shape == GridShape::disk) {
                double xx = x(i), yy = y(j);
                // tiny slack so the axis nodes at |z| = R stay boundary, not dropped
                masked = xx * xx + yy * yy > r2 * (1.0 + 1e-14);
            }
            if (!edge && !masked) {
                int idx = index(i, j);
                interior_[idx] = 1;
                interior_rank_[idx] = num_interior_++;
                interior_nodes_.push_back(idx);
            }
        }
    }
}

GridSpec build_grid(double radius, int n, GridShape shape) { return GridSpec(radius, n, shape); }

} // namespace kw
