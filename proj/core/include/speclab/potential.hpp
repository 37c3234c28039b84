#pragma once

#include <optional>
#include <variant>

#include "speclab/grid.hpp"

namespace speclab {

// V(x) = min(|x|^{-alpha}, cap), |x| the distance to the origin (torus
// distance when sampled on a grid, Euclidean for pointwise quadrature).
struct InversePowerPotential {
    double alpha = 1.0;
    double cap = kInf;
};

// V(x) = -depth * exp(-(|x|/width)^2): an attractive well at the origin.
struct GaussianWellPotential {
    double depth = 1.0;
    double width = 1.0;
};

struct TabulatedPotential {
    GridFunction values;
};

// A real potential V = V_+ - V_- evaluated pointwise (continuum) or sampled
// on a grid. Tabulated potentials only support sampling on their own grid.
class PotentialSpec {
  public:
    PotentialSpec() : form_(GaussianWellPotential{}) {}
    explicit PotentialSpec(InversePowerPotential p) : form_(p) {}
    explicit PotentialSpec(GaussianWellPotential p) : form_(p) {}
    explicit PotentialSpec(TabulatedPotential p) : form_(std::move(p)) {}

    static PotentialSpec inverse_power(double alpha, double cap = kInf) {
        return PotentialSpec(InversePowerPotential{alpha, cap});
    }
    static PotentialSpec gaussian_well(double depth, double width) {
        return PotentialSpec(GaussianWellPotential{depth, width});
    }
    static PotentialSpec tabulated(GridFunction values) {
        return PotentialSpec(TabulatedPotential{std::move(values)});
    }

    bool is_tabulated() const { return std::holds_alternative<TabulatedPotential>(form_); }

    // Continuum evaluation at Euclidean distance r from the origin, without
    // any cap (the Kato quadrature integrates the raw singularity).
    double value_uncapped(double r) const;
    // Continuum evaluation with the cap applied.
    double value(double r) const;

    // Sample onto a grid using torus distance to the origin.
    std::vector<double> sample(const TorusGrid& grid) const;

    const std::variant<InversePowerPotential, GaussianWellPotential, TabulatedPotential>&
    form() const {
        return form_;
    }

  private:
    std::variant<InversePowerPotential, GaussianWellPotential, TabulatedPotential> form_;
};

} // namespace speclab
