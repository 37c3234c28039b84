#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "speclab/errors.hpp"

namespace speclab {

using cdouble = std::complex<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Hölder conjugate: p' with 1/p + 1/p' = 1.
double conjugate_exponent(double p);

// Periodic box [0,L)^d sampled on n points per axis. n and L are powers of
// two so that dyadic cube sides are exact multiples of the spacing h = L/n.
class TorusGrid {
  public:
    TorusGrid() = default;

    int dim() const { return d_; }
    std::int64_t points_per_axis() const { return n_; }
    double side_length() const { return L_; }
    double spacing() const { return h_; }
    std::int64_t point_count() const { return total_; }
    // h^d, the measure of one grid cell.
    double cell_measure() const { return cell_; }

    double axis_coord(std::int64_t i) const { return static_cast<double>(i) * h_; }

    // Row-major flattening (d=2: index = ix*n + iy).
    std::int64_t flatten(std::int64_t ix, std::int64_t iy = 0) const {
        return d_ == 1 ? ix : ix * n_ + iy;
    }
    std::int64_t axis_index(std::int64_t flat, int axis) const {
        return d_ == 1 ? flat : (axis == 0 ? flat / n_ : flat % n_);
    }

    // Representative of x in [-L/2, L/2).
    double lift(double x) const;
    // Torus distance between two scalar coordinates.
    double axis_distance(double a, double b) const { return std::abs(lift(a - b)); }
    // Euclidean torus distance between the points with flat indices i and j.
    double point_distance(std::int64_t i, std::int64_t j) const;
    // Euclidean torus distance from point i to the point with coords c.
    double point_distance_to(std::int64_t i, const double* c) const;

    bool operator==(const TorusGrid& o) const {
        return d_ == o.d_ && n_ == o.n_ && L_ == o.L_;
    }

    friend TorusGrid make_grid(int d, std::int64_t n, double L, std::int64_t max_points);

  private:
    int d_ = 0;
    std::int64_t n_ = 0;
    double L_ = 0.0;
    double h_ = 0.0;
    double cell_ = 0.0;
    std::int64_t total_ = 0;
};

inline constexpr std::int64_t kDefaultPointCap = std::int64_t(1) << 24;

TorusGrid make_grid(int d, std::int64_t n, double L,
                    std::int64_t max_points = kDefaultPointCap);

// Complex scalar field sampled on a TorusGrid, value semantics throughout.
class GridFunction {
  public:
    GridFunction() = default;
    explicit GridFunction(const TorusGrid& grid)
        : grid_(grid), values_(static_cast<std::size_t>(grid.point_count())) {}
    GridFunction(const TorusGrid& grid, std::vector<cdouble> values);

    const TorusGrid& grid() const { return grid_; }
    std::span<const cdouble> values() const { return values_; }
    std::span<cdouble> values() { return values_; }
    std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }

    cdouble& operator[](std::int64_t i) { return values_[static_cast<std::size_t>(i)]; }
    const cdouble& operator[](std::int64_t i) const {
        return values_[static_cast<std::size_t>(i)];
    }

    GridFunction& operator+=(const GridFunction& o);
    GridFunction& operator-=(const GridFunction& o);
    GridFunction& operator*=(cdouble c);

  private:
    TorusGrid grid_;
    std::vector<cdouble> values_;
};

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator*(cdouble c, GridFunction f);

// (h^d sum |f|^p)^{1/p}; max |f| for p = infinity. Throws InvalidData on NaN.
double lp_norm(const GridFunction& f, double p);

// Weighted L^2 inner product h^d <f, g> (conjugate-linear in f).
cdouble inner_product(const GridFunction& f, const GridFunction& g);

GridFunction unit_impulse(const TorusGrid& grid, std::int64_t at);
GridFunction constant_function(const TorusGrid& grid, cdouble value = 1.0);

// Deterministic pseudo-random complex field with unit-variance entries.
GridFunction random_function(const TorusGrid& grid, std::uint64_t seed);

// Flat binary layout: header (d, n, L) then row-major values with real and
// imaginary parts interleaved. CSV variant mirrors it in text form.
void write_binary(const GridFunction& f, std::ostream& out);
GridFunction read_binary(std::istream& in);
void write_csv(const GridFunction& f, std::ostream& out);
GridFunction read_csv(std::istream& in);

} // namespace speclab
