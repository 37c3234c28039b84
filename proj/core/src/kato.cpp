#include "speclab/kato.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "speclab/quadrature.hpp"

namespace speclab {

namespace {

double sphere_surface(int d) {
    switch (d) {
        case 1: return 2.0;
        case 2: return 2.0 * std::numbers::pi;
        default: return 4.0 * std::numbers::pi;
    }
}

double singular_kernel(int d, double rho) {
    switch (d) {
        case 3: return 1.0 / rho;
        case 2: return std::log(1.0 / rho);
        default: return 1.0;
    }
}

// Integral of |V| over the sphere of radius rho centered at distance xmag
// from the potential's origin (our analytic potentials are radial).
double angular_total(const PotentialSpec& V, int d, double xmag, double rho) {
    if (xmag == 0.0) return sphere_surface(d) * std::abs(V.value_uncapped(rho));
    if (d == 1)
        return std::abs(V.value_uncapped(std::abs(xmag - rho))) +
               std::abs(V.value_uncapped(xmag + rho));
    if (d == 2) {
        auto f = [&](double theta) {
            double r2 = xmag * xmag + rho * rho + 2.0 * xmag * rho * std::cos(theta);
            return std::abs(V.value_uncapped(std::sqrt(std::max(r2, 0.0))));
        };
        return 2.0 * integrate_adaptive(f, 0.0, std::numbers::pi, 1e-12, 1e-8).value;
    }
    auto f = [&](double u) {
        double r2 = xmag * xmag + rho * rho + 2.0 * xmag * rho * u;
        return std::abs(V.value_uncapped(std::sqrt(std::max(r2, 0.0))));
    };
    return 2.0 * std::numbers::pi * integrate_adaptive(f, -1.0, 1.0, 1e-12, 1e-8).value;
}

double center_integral(const PotentialSpec& V, int d, double xmag, double r,
                       double rel_tol) {
    auto radial = [&](double rho) {
        return std::pow(rho, d - 1) * singular_kernel(d, rho) *
               angular_total(V, d, xmag, rho);
    };
    return integrate_singular_origin(radial, r, rel_tol).value;
}

} // namespace

double kato_norm(const PotentialSpec& V, double r, int d, const KatoOptions& opts) {
    if (!(r > 0)) throw InvalidArgument("kato_norm requires r > 0");
    if (d < 1 || d > 3) throw InvalidArgument("kato_norm requires d in {1,2,3}");
    if (V.is_tabulated())
        throw InvalidArgument("kato_norm requires a pointwise-evaluable potential");

    std::vector<double> centers{0.0, r / 2.0, r};
    for (const auto& c : opts.extra_centers) {
        double mag = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
        centers.push_back(mag);
    }
    double sup = 0.0;
    for (double xmag : centers)
        sup = std::max(sup, center_integral(V, d, xmag, r, opts.rel_tol));
    return sup;
}

KatoScan kato_limit_scan(const PotentialSpec& V, int d, std::vector<double> radii,
                         const KatoOptions& opts) {
    if (radii.size() < 2) throw InvalidArgument("kato_limit_scan needs >= 2 radii");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i] < radii[i - 1]))
            throw InvalidArgument("radii must be strictly decreasing");

    KatoScan scan;
    double slx = 0, sly = 0, sxx = 0, sxy = 0;
    for (double r : radii) {
        double v = kato_norm(V, r, d, opts);
        scan.rows.push_back({r, v});
        double lx = std::log(r), ly = std::log(std::max(v, 1e-300));
        slx += lx;
        sly += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(radii.size());
    double denom = n * sxx - slx * slx;
    scan.fitted_power = denom != 0.0 ? (n * sxy - slx * sly) / denom : 0.0;
    return scan;
}

} // namespace speclab
