#pragma once

#include <array>
#include <vector>

#include "speclab/potential.hpp"

namespace speclab {

struct KatoOptions {
    // Centers x over which the sup is taken; the origin is always included.
    std::vector<std::array<double, 3>> extra_centers;
    double rel_tol = 1e-7;
};

// sup over centers x of the d-dependent local singular integral of |V|:
//   d=3: integral over |x-y| < r of |V(y)| / |x-y| dy
//   d=2: integral over |x-y| < r of log(1/|x-y|) |V(y)| dy
//   d=1: integral over |x-y| < r of |V(y)| dy
// computed by radial-shell quadrature, adaptive toward the singularity.
double kato_norm(const PotentialSpec& V, double r, int d,
                 const KatoOptions& opts = {});

struct KatoScanRow {
    double r;
    double value;
};

struct KatoScan {
    std::vector<KatoScanRow> rows;
    double fitted_power = 0.0; // slope of log(value) against log(r)
};

// kato_norm over a decreasing radius list plus a power-law fit of the decay.
KatoScan kato_limit_scan(const PotentialSpec& V, int d, std::vector<double> radii,
                         const KatoOptions& opts = {});

} // namespace speclab
