#pragma once

#include <functional>
#include <vector>

#include "speclab/errors.hpp"

namespace speclab {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
};

// Adaptive Gauss-Kronrod (G7, K15) on [a, b]. Recurses until the local error
// estimate passes abs_tol + rel_tol * |whole|; throws NumericalFailure when
// max_depth is exhausted with the remaining error estimate in the message.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double abs_tol = 1e-10,
                                    double rel_tol = 1e-9, int max_depth = 24);

// Integral over (0, r] of an integrand that may be singular at 0. Dyadic
// panels [r 2^{-m-1}, r 2^{-m}] are accumulated until the running tail falls
// below tol relative to the total; a non-decaying tail (non-integrable
// singularity) raises NumericalFailure.
QuadratureResult integrate_singular_origin(const std::function<double(double)>& f,
                                           double r, double rel_tol = 1e-8,
                                           int max_panels = 64);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre rule with k nodes on [a, b].
QuadratureRule gauss_legendre(int k, double a, double b);

// Generalized Gauss-Laguerre rule: sum w_i g(t_i) ~= integral over (0, inf)
// of t^alpha e^{-t} g(t) dt, alpha > -1. Computed by Golub-Welsch.
QuadratureRule gauss_laguerre(int k, double alpha);

} // namespace speclab
