#pragma once

#include <vector>

#include "speclab/grid.hpp"

namespace speclab {

enum class FourierDirection { forward, inverse };

// Unitary discrete Fourier transform on the torus grid. The result lives on
// the same grid object with values indexed by frequency; frequency index j
// per axis stands for xi = (2*pi/L) * w(j), w(j) = j < n/2 ? j : j - n, so the
// frequency set is (2*pi/L) * {-n/2, ..., n/2 - 1}. inverse(forward(f)) = f
// up to roundoff and Parseval holds exactly for the weighted L^2 norm.
GridFunction fourier_transform(const GridFunction& f, FourierDirection dir);

// Signed integer frequency multiplier w(j) for axis index j.
std::int64_t frequency_index(const TorusGrid& grid, std::int64_t j);

// xi component for axis index j: (2*pi/L) * w(j).
double frequency(const TorusGrid& grid, std::int64_t j);

// |xi|^2 for the flat frequency index k (row-major for d=2).
double frequency_norm_sq(const TorusGrid& grid, std::int64_t k);

// Table of |xi|^2 over all flat frequency indices.
std::vector<double> frequency_norms_sq(const TorusGrid& grid);

} // namespace speclab
