#pragma once

#include <cstdint>
#include <vector>

#include "kwplane/errors.hpp"

namespace kw {

enum class GridShape { square, disk };

/// Uniform tensor grid on [-R,R]^2 with n nodes per axis (n odd, so z=0 is
/// a node). Square shape: the outermost ring is the Dirichlet boundary.
/// Disk shape: nodes with |z| > R are additionally masked as boundary.
class GridSpec {
public:
    GridSpec(double radius, int n, GridShape shape = GridShape::square);

    double radius() const { return radius_; }
    int n() const { return n_; }
    GridShape shape() const { return shape_; }
    double spacing() const { return spacing_; }
    int num_nodes() const { return n_ * n_; }
    int num_interior() const { return num_interior_; }

    int index(int i, int j) const { return j * n_ + i; }
    double x(int i) const { return -radius_ + spacing_ * i; }
    double y(int j) const { return -radius_ + spacing_ * j; }

    bool is_interior(int i, int j) const { return interior_[index(i, j)]; }
    bool is_interior(int idx) const { return interior_[idx]; }

    /// Row-major list of interior node indices (stable ordering for solvers).
    const std::vector<int>& interior_nodes() const { return interior_nodes_; }
    /// Position of a node in interior_nodes(), or -1 for boundary nodes.
    int interior_rank(int idx) const { return interior_rank_[idx]; }

    bool operator==(const GridSpec& o) const {
        return radius_ == o.radius_ && n_ == o.n_ && shape_ == o.shape_;
    }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }

private:
    double radius_;
    int n_;
    GridShape shape_;
    double spacing_;
    int num_interior_ = 0;
    std::vector<std::uint8_t> interior_;
    std::vector<int> interior_nodes_;
    std::vector<int> interior_rank_;
};

/// Factory with the documented validation (R > 0, n >= 5 and odd).
GridSpec build_grid(double radius, int n, GridShape shape = GridShape::square);

} // namespace kw
