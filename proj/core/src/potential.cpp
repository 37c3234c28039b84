#include "speclab/potential.hpp"

#include <cmath>

namespace speclab {

double PotentialSpec::value_uncapped(double r) const {
    if (const auto* ip = std::get_if<InversePowerPotential>(&form_))
        return std::pow(r, -ip->alpha);
    if (const auto* gw = std::get_if<GaussianWellPotential>(&form_)) {
        double s = r / gw->width;
        return -gw->depth * std::exp(-s * s);
    }
    throw InvalidArgument("tabulated potential has no continuum evaluation");
}

double PotentialSpec::value(double r) const {
    if (const auto* ip = std::get_if<InversePowerPotential>(&form_))
        return std::min(std::pow(r, -ip->alpha), ip->cap);
    return value_uncapped(r);
}

std::vector<double> PotentialSpec::sample(const TorusGrid& grid) const {
    std::vector<double> out(static_cast<std::size_t>(grid.point_count()));
    if (const auto* tab = std::get_if<TabulatedPotential>(&form_)) {
        if (!(tab->values.grid() == grid))
            throw InvalidArgument("tabulated potential sampled on a different grid");
        for (std::int64_t i = 0; i < grid.point_count(); ++i) {
            cdouble v = tab->values[i];
            if (v.imag() != 0.0) throw InvalidData("potential must be real-valued");
            out[static_cast<std::size_t>(i)] = v.real();
        }
        return out;
    }
    const double origin[2] = {0.0, 0.0};
    for (std::int64_t i = 0; i < grid.point_count(); ++i)
        out[static_cast<std::size_t>(i)] = value(grid.point_distance_to(i, origin));
    return out;
}

} // namespace speclab
