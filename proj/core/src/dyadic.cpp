#include "speclab/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace speclab {

namespace {

int exact_log2(double v) {
    int e = 0;
    double m = std::frexp(v, &e); // v = m * 2^e, m in [0.5, 1)
    return e - 1;                 // valid because callers guarantee m == 0.5
}

} // namespace

int min_scale(const TorusGrid& grid) { return -exact_log2(grid.side_length()); }

int max_scale(const TorusGrid& grid) { return -exact_log2(grid.spacing()); }

DyadicPartition dyadic_partition(const TorusGrid& grid, int j) {
    const int jmin = min_scale(grid), jmax = max_scale(grid);
    if (j < jmin || j > jmax)
        throw ScaleOutOfRange("scale j=" + std::to_string(j) + " outside valid interval [" +
                              std::to_string(jmin) + ", " + std::to_string(jmax) + "]");
    DyadicPartition p;
    p.grid_ = grid;
    p.j_ = j;
    p.side_ = std::ldexp(1.0, -j);
    p.cubes_per_axis_ = static_cast<std::int64_t>(std::llround(grid.side_length() / p.side_));
    p.points_per_side_ = grid.points_per_axis() / p.cubes_per_axis_;

    const std::int64_t m = p.cubes_per_axis_;
    if (grid.dim() == 1) {
        p.cubes_.reserve(static_cast<std::size_t>(m));
        for (std::int64_t a = 0; a < m; ++a)
            p.cubes_.push_back(Cube{j, {a, 0}, p.side_, p.points_per_side_});
    } else {
        p.cubes_.reserve(static_cast<std::size_t>(m * m));
        for (std::int64_t a = 0; a < m; ++a)
            for (std::int64_t b = 0; b < m; ++b)
                p.cubes_.push_back(Cube{j, {a, b}, p.side_, p.points_per_side_});
    }
    return p;
}

std::int64_t DyadicPartition::cube_of_point(std::int64_t i) const {
    if (grid_.dim() == 1) return i / points_per_side_;
    std::int64_t ax = (i / grid_.points_per_axis()) / points_per_side_;
    std::int64_t ay = (i % grid_.points_per_axis()) / points_per_side_;
    return ax * cubes_per_axis_ + ay;
}

std::vector<std::int64_t> DyadicPartition::point_indices(const Cube& c) const {
    std::vector<std::int64_t> out;
    const std::int64_t s = points_per_side_;
    if (grid_.dim() == 1) {
        out.reserve(static_cast<std::size_t>(s));
        for (std::int64_t i = 0; i < s; ++i) out.push_back(c.anchor[0] * s + i);
        return out;
    }
    out.reserve(static_cast<std::size_t>(s * s));
    const std::int64_t n = grid_.points_per_axis();
    for (std::int64_t ix = 0; ix < s; ++ix)
        for (std::int64_t iy = 0; iy < s; ++iy)
            out.push_back((c.anchor[0] * s + ix) * n + (c.anchor[1] * s + iy));
    return out;
}

namespace {

// Distance between [lo1, lo1+side] and [lo2, lo2+side] on a circle of
// circumference L: gap between anchor offsets minus one side, floored at 0.
double axis_interval_distance(double lo1, double lo2, double side, double L) {
    double delta = std::abs(lo1 - lo2);
    delta = std::min(delta, L - delta);
    return std::max(0.0, delta - side);
}

} // namespace

double cube_distance(const DyadicPartition& p, const Cube& a, const Cube& b) {
    if (a.j != p.scale() || b.j != p.scale() || a.points_per_side != b.points_per_side)
        throw InvalidArgument("cubes do not belong to this partition");
    const double L = p.grid().side_length();
    if (p.grid().dim() == 1)
        return axis_interval_distance(a.axis_lo(0), b.axis_lo(0), a.side, L);
    double gx = axis_interval_distance(a.axis_lo(0), b.axis_lo(0), a.side, L);
    double gy = axis_interval_distance(a.axis_lo(1), b.axis_lo(1), a.side, L);
    return std::hypot(gx, gy);
}

GridFunction restrict_to_cube(const GridFunction& f, const DyadicPartition& p,
                              const Cube& q) {
    if (!(f.grid() == p.grid())) throw InvalidArgument("grid mismatch in restrict_to_cube");
    GridFunction out(f.grid());
    for (std::int64_t i : p.point_indices(q)) out[i] = f[i];
    return out;
}

} // namespace speclab
