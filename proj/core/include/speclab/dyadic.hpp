#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "speclab/grid.hpp"

namespace speclab {

// Axis-aligned dyadic cube of side 2^{-j} on the torus. anchor counts cubes
// from the origin per axis; the covered grid indices per axis are
// [anchor * points_per_side, (anchor + 1) * points_per_side).
struct Cube {
    int j = 0;
    std::array<std::int64_t, 2> anchor{0, 0};
    double side = 0.0;
    std::int64_t points_per_side = 0;

    double axis_lo(int axis) const { return static_cast<double>(anchor[axis]) * side; }
    double axis_hi(int axis) const { return static_cast<double>(anchor[axis] + 1) * side; }
};

// All cubes of scale j tiling the grid, in lexicographic anchor order.
class DyadicPartition {
  public:
    DyadicPartition() = default;

    const TorusGrid& grid() const { return grid_; }
    int scale() const { return j_; }
    double cube_side() const { return side_; }
    std::int64_t cubes_per_axis() const { return cubes_per_axis_; }
    std::int64_t size() const { return static_cast<std::int64_t>(cubes_.size()); }
    const Cube& cube(std::int64_t i) const { return cubes_[static_cast<std::size_t>(i)]; }
    const std::vector<Cube>& cubes() const { return cubes_; }

    // Index of the cube containing the grid point with flat index i.
    std::int64_t cube_of_point(std::int64_t i) const;

    // Flat grid indices covered by cube c, in row-major order.
    std::vector<std::int64_t> point_indices(const Cube& c) const;

    friend DyadicPartition dyadic_partition(const TorusGrid& grid, int j);

  private:
    TorusGrid grid_;
    int j_ = 0;
    double side_ = 0.0;
    std::int64_t cubes_per_axis_ = 0;
    std::int64_t points_per_side_ = 0;
    std::vector<Cube> cubes_;
};

// Valid scale window [j_min, j_max]: 2^{-j} <= L and 2^{-j} >= h.
int min_scale(const TorusGrid& grid);
int max_scale(const TorusGrid& grid);

DyadicPartition dyadic_partition(const TorusGrid& grid, int j);

// Minimal torus Euclidean distance between the closed cubes a and b;
// zero for identical or touching cubes.
double cube_distance(const DyadicPartition& p, const Cube& a, const Cube& b);

// Pointwise product of f with the indicator of Q.
GridFunction restrict_to_cube(const GridFunction& f, const DyadicPartition& p,
                              const Cube& q);

} // namespace speclab
