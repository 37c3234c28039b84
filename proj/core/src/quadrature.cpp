#include "speclab/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace speclab {

namespace {

// Kronrod-15 abscissae on [-1, 1] (symmetric; odd entries are the G7 nodes).
constexpr double kK15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kK15Weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kG7Weights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelEstimate {
    double k15;
    double err;
};

PanelEstimate panel_gk(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double k15 = 0.0, g7 = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kK15Nodes[i];
        const double flo = f(c - dx);
        const double fhi = i == 7 ? flo : f(c + dx);
        const double fsum = i == 7 ? flo : flo + fhi;
        k15 += kK15Weights[i] * fsum;
        if (i % 2 == 1) g7 += kG7Weights[i / 2] * fsum;
    }
    k15 *= h;
    g7 *= h;
    double err = std::pow(200.0 * std::abs(k15 - g7), 1.5);
    return {k15, std::min(err, std::abs(k15 - g7) * 200.0)};
}

void adapt(const std::function<double(double)>& f, double a, double b, double tol,
           int depth, int max_depth, QuadratureResult& acc) {
    PanelEstimate e = panel_gk(f, a, b);
    acc.evaluations += 15;
    if (e.err <= tol || depth >= max_depth) {
        if (e.err > tol)
            throw NumericalFailure("adaptive quadrature depth exhausted, error estimate " +
                                   std::to_string(e.err));
        acc.value += e.k15;
        acc.error_estimate += e.err;
        return;
    }
    const double m = 0.5 * (a + b);
    adapt(f, a, m, tol / 2, depth + 1, max_depth, acc);
    adapt(f, m, b, tol / 2, depth + 1, max_depth, acc);
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double abs_tol, double rel_tol,
                                    int max_depth) {
    PanelEstimate whole = panel_gk(f, a, b);
    double tol = std::max(abs_tol, rel_tol * std::abs(whole.k15));
    QuadratureResult acc;
    acc.evaluations = 15;
    if (whole.err <= tol) {
        acc.value = whole.k15;
        acc.error_estimate = whole.err;
        return acc;
    }
    acc.evaluations = 0;
    adapt(f, a, b, tol, 0, max_depth, acc);
    return acc;
}

QuadratureResult integrate_singular_origin(const std::function<double(double)>& f,
                                           double r, double rel_tol, int max_panels) {
    if (!(r > 0)) throw InvalidArgument("integration radius must be positive");
    QuadratureResult acc;
    double hi = r;
    double prev_panel = kInf;
    int grew = 0;
    for (int m = 0; m < max_panels; ++m) {
        double lo = hi / 2;
        QuadratureResult panel = integrate_adaptive(f, lo, hi, 0.0, 1e-10, 30);
        acc.value += panel.value;
        acc.error_estimate += panel.error_estimate;
        acc.evaluations += panel.evaluations;
        double mag = std::abs(panel.value);
        if (mag > prev_panel * 1.05) {
            // Panels growing toward the origin signal a non-integrable
            // singularity; give it a short leash then fail.
            if (++grew > 6)
                throw NumericalFailure(
                    "singular-endpoint quadrature diverges near 0, last panel " +
                    std::to_string(mag));
        } else {
            grew = 0;
        }
        if (mag <= rel_tol * std::max(std::abs(acc.value), 1e-300) && m >= 4) {
            // Remaining tail is below one panel's worth of tolerance.
            acc.error_estimate += mag;
            return acc;
        }
        prev_panel = mag;
        hi = lo;
    }
    throw NumericalFailure("singular-endpoint quadrature: panel budget exhausted, "
                           "last tail " + std::to_string(prev_panel));
}

QuadratureRule gauss_legendre(int k, double a, double b) {
    if (k < 1) throw InvalidArgument("gauss_legendre needs k >= 1");
    // Golub-Welsch on the Legendre Jacobi matrix.
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(k, k);
    for (int i = 1; i < k; ++i) {
        double bi = i / std::sqrt(4.0 * i * i - 1.0);
        J(i - 1, i) = bi;
        J(i, i - 1) = bi;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(k));
    rule.weights.resize(static_cast<std::size_t>(k));
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < k; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = mid + half * es.eigenvalues()(i);
        double w0 = es.eigenvectors()(0, i);
        rule.weights[static_cast<std::size_t>(i)] = 2.0 * w0 * w0 * half;
    }
    return rule;
}

QuadratureRule gauss_laguerre(int k, double alpha) {
    if (k < 1) throw InvalidArgument("gauss_laguerre needs k >= 1");
    if (alpha <= -1.0) throw InvalidArgument("gauss_laguerre needs alpha > -1");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) {
        J(i, i) = 2.0 * i + alpha + 1.0;
        if (i + 1 < k) {
            double bi = std::sqrt((i + 1.0) * (i + 1.0 + alpha));
            J(i, i + 1) = bi;
            J(i + 1, i) = bi;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(k));
    rule.weights.resize(static_cast<std::size_t>(k));
    const double mu0 = std::tgamma(alpha + 1.0);
    for (int i = 0; i < k; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
        double w0 = es.eigenvectors()(0, i);
        rule.weights[static_cast<std::size_t>(i)] = mu0 * w0 * w0;
    }
    return rule;
}

} // namespace speclab
