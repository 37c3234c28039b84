#include "speclab/normest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace speclab {

namespace {

double plain_p_norm(const Eigen::VectorXcd& v, double p) {
    if (std::isinf(p)) return v.cwiseAbs().maxCoeff();
    if (p == 1.0) return v.cwiseAbs().sum();
    if (p == 2.0) return v.norm();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) acc += std::pow(std::abs(v(i)), p);
    return std::pow(acc, 1.0 / p);
}

cdouble phase_of(cdouble v) {
    double a = std::abs(v);
    return a == 0.0 ? cdouble(0.0) : v / a;
}

// x_i <- |v_i|^{e} * phase(v_i)
Eigen::VectorXcd signed_power(const Eigen::VectorXcd& v, double e) {
    Eigen::VectorXcd out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double a = std::abs(v(i));
        out(i) = a == 0.0 ? cdouble(0.0) : std::pow(a, e) * phase_of(v(i));
    }
    return out;
}

} // namespace

double spectral_norm(const Eigen::MatrixXcd& M) {
    const double scale = M.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0.0;
    const double tol = 1e-12 * (1.0 + scale);
    if ((M - M.adjoint()).cwiseAbs().maxCoeff() <= tol) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
        return es.eigenvalues().cwiseAbs().maxCoeff();
    }
    if ((M + M.adjoint()).cwiseAbs().maxCoeff() <= tol) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(cdouble(0, 1) * M,
                                                           Eigen::EigenvaluesOnly);
        return es.eigenvalues().cwiseAbs().maxCoeff();
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    return svd.singularValues()(0);
}

double exact_norm(const Eigen::MatrixXcd& M, double p) {
    if (p == 1.0) return M.cwiseAbs().colwise().sum().maxCoeff();
    if (std::isinf(p)) return M.cwiseAbs().rowwise().sum().maxCoeff();
    if (p == 2.0) return spectral_norm(M);
    throw UnsupportedNormPair("exact_norm supports p in {1, 2, inf}; use norm_bracket");
}

double exact_norm(const LinearGridOperator& A, double p, std::int64_t cap) {
    if (A.representation() == Representation::symbol) {
        // Circulant fast paths: the 2-norm is the symbol sup, and every
        // column of |M| carries the same profile so the 1- and inf-norms are
        // one inverse transform away.
        if (p == 2.0 && A.selfadjoint()) {
            double m = 0.0;
            for (cdouble v : A.symbol()) m = std::max(m, std::abs(v));
            return m;
        }
        if (p == 1.0 || std::isinf(p)) {
            GridFunction s(A.grid(), A.symbol());
            GridFunction c = fourier_transform(s, FourierDirection::inverse);
            double scale = 1.0 / std::sqrt(static_cast<double>(A.grid().point_count()));
            double acc = 0.0;
            for (cdouble v : c.values()) acc += std::abs(v) * scale;
            return acc;
        }
    }
    if (A.representation() == Representation::spectral && p == 2.0)
        return A.multipliers().cwiseAbs().maxCoeff();
    return exact_norm(A.value_matrix(cap), p);
}

double exact_pq_norm(const Eigen::MatrixXcd& M, double cell, double p, double q) {
    if (p == 1.0 && q == 1.0) return M.cwiseAbs().colwise().sum().maxCoeff();
    if (std::isinf(p) && std::isinf(q)) return M.cwiseAbs().rowwise().sum().maxCoeff();
    if (p == 2.0 && q == 2.0) return spectral_norm(M);
    if (p == 1.0 && std::isinf(q)) return M.cwiseAbs().maxCoeff() / cell;
    if (p == 1.0 && q == 2.0)
        return M.colwise().norm().maxCoeff() / std::sqrt(cell);
    if (p == 2.0 && std::isinf(q))
        return M.rowwise().norm().maxCoeff() / std::sqrt(cell);
    throw UnsupportedNormPair("no closed form for this (p,q); use norm_bracket");
}

namespace {

double probe_ratio(const Eigen::MatrixXcd& M, const Eigen::VectorXcd& x, double p) {
    double nx = plain_p_norm(x, p);
    if (nx == 0.0) return 0.0;
    return plain_p_norm(M * x, p) / nx;
}

double power_method(const Eigen::MatrixXcd& M, Eigen::VectorXcd x, double p, int iters) {
    const double pc = conjugate_exponent(p);
    double best = 0.0;
    double nx = plain_p_norm(x, p);
    if (nx == 0.0) return 0.0;
    x /= nx;
    for (int it = 0; it < iters; ++it) {
        Eigen::VectorXcd y = M * x;
        double ny = plain_p_norm(y, p);
        best = std::max(best, ny);
        if (ny == 0.0) break;
        Eigen::VectorXcd z = signed_power(y, p - 1.0);
        Eigen::VectorXcd w = M.adjoint() * z;
        if (plain_p_norm(w, pc) == 0.0) break;
        x = signed_power(w, pc - 1.0);
        double nn = plain_p_norm(x, p);
        if (nn == 0.0) break;
        x /= nn;
    }
    return best;
}

} // namespace

double lower_bound_norm(const Eigen::MatrixXcd& M, double p, const ProbeOptions& opts) {
    const Eigen::Index N = M.cols();
    if (M.cwiseAbs().maxCoeff() == 0.0) return 0.0;
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double best = 0.0;

    // Coordinate probes (exact maximizers for p = 1).
    for (Eigen::Index i = 0; i < std::min<Eigen::Index>(N, opts.probes); ++i)
        best = std::max(best, probe_ratio(M, Eigen::VectorXcd::Unit(N, i), p));

    Eigen::VectorXcd best_random;
    for (int k = 0; k < opts.probes; ++k) {
        Eigen::VectorXcd x(N);
        for (Eigen::Index i = 0; i < N; ++i) x(i) = cdouble(gauss(rng), gauss(rng));
        double r = probe_ratio(M, x, p);
        if (r > best || best_random.size() == 0) best_random = x;
        best = std::max(best, r);
    }

    if (p > 1.0 && !std::isinf(p) && best_random.size() > 0)
        best = std::max(best, power_method(M, best_random, p, opts.power_iterations));
    // All-ones probe catches row-sum maximizers for large p.
    best = std::max(best, probe_ratio(M, Eigen::VectorXcd::Ones(N), p));
    return best;
}

double lower_bound_norm(const LinearGridOperator& A, double p, const ProbeOptions& opts,
                        std::int64_t cap) {
    Eigen::MatrixXcd M = A.value_matrix(cap);
    double best = lower_bound_norm(M, p, opts);

    // Structured grid probes: wave packets exp(-|x-x0|^2 / s^2) e^{i xi0 x}.
    const TorusGrid& grid = A.grid();
    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double L = grid.side_length();
    for (int k = 0; k < opts.probes / 2 + 1; ++k) {
        double c0[2] = {unif(rng) * L, unif(rng) * L};
        double s = L * (0.02 + 0.2 * unif(rng));
        double xi = (unif(rng) - 0.5) * 2.0 * std::numbers::pi /
                    grid.spacing() * 0.5;
        Eigen::VectorXcd x(grid.point_count());
        for (std::int64_t i = 0; i < grid.point_count(); ++i) {
            double r = grid.point_distance_to(i, c0);
            double arg = xi * grid.axis_coord(grid.axis_index(i, 0));
            x(i) = std::exp(-r * r / (s * s)) * cdouble(std::cos(arg), std::sin(arg));
        }
        best = std::max(best, probe_ratio(M, x, p));
    }
    return best;
}

double interpolated_upper_bound(const Eigen::MatrixXcd& M, double p) {
    if (p < 1.0) throw InvalidArgument("exponent p must be >= 1");
    if (p == 1.0) return exact_norm(M, 1.0);
    if (std::isinf(p)) return exact_norm(M, kInf);
    if (p == 2.0) return exact_norm(M, 2.0);
    if (p < 2.0) {
        double n1 = exact_norm(M, 1.0), n2 = exact_norm(M, 2.0);
        return std::pow(n1, 2.0 / p - 1.0) * std::pow(n2, 2.0 - 2.0 / p);
    }
    double n2 = exact_norm(M, 2.0), ni = exact_norm(M, kInf);
    return std::pow(n2, 2.0 / p) * std::pow(ni, 1.0 - 2.0 / p);
}

double interpolated_upper_bound(const LinearGridOperator& A, double p, std::int64_t cap) {
    return interpolated_upper_bound(A.value_matrix(cap), p);
}

namespace {

NormBracket assemble_bracket(const Eigen::MatrixXcd& M, double p,
                             const ProbeOptions& opts) {
    NormBracket b;
    b.p = p;
    if (p == 1.0 || p == 2.0 || std::isinf(p)) {
        b.lower = b.upper = exact_norm(M, p);
        b.lower_method = b.upper_method = "exact";
        return b;
    }
    b.lower = lower_bound_norm(M, p, opts);
    b.upper = interpolated_upper_bound(M, p);
    b.lower_method = "probes+dual-power";
    b.upper_method = "interpolation";
    b.probe_count = opts.probes;
    return b;
}

} // namespace

NormBracket norm_bracket(const Eigen::MatrixXcd& M, double p, const ProbeOptions& opts) {
    return assemble_bracket(M, p, opts);
}

NormBracket norm_bracket(const LinearGridOperator& A, double p, const ProbeOptions& opts,
                         std::int64_t cap) {
    NormBracket b;
    b.p = p;
    if (p == 1.0 || p == 2.0 || std::isinf(p)) {
        b.lower = b.upper = exact_norm(A, p, cap);
        b.lower_method = b.upper_method = "exact";
        return b;
    }
    b.lower = lower_bound_norm(A, p, opts, cap);
    b.upper = interpolated_upper_bound(A, p, cap);
    b.lower_method = "probes+dual-power";
    b.upper_method = "interpolation";
    b.probe_count = opts.probes;
    return b;
}

} // namespace speclab
