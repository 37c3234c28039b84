#include "speclab/operator.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>

#include "speclab/quadrature.hpp"

namespace speclab {

namespace {

void check_dense_cap(const TorusGrid& grid, std::int64_t cap) {
    if (grid.point_count() > cap)
        throw CapacityError("dense materialization of " +
                            std::to_string(grid.point_count()) +
                            " points exceeds cap " + std::to_string(cap));
}

// First column of the circulant value matrix of a symbol operator:
// c_r = (1/N) sum_k sym_k exp(2 pi i k.r / n).
std::vector<cdouble> circulant_column(const TorusGrid& grid,
                                      const std::vector<cdouble>& symbol) {
    GridFunction s(grid, symbol);
    GridFunction c = fourier_transform(s, FourierDirection::inverse);
    const double scale = 1.0 / std::sqrt(static_cast<double>(grid.point_count()));
    std::vector<cdouble> out(c.values().begin(), c.values().end());
    for (auto& v : out) v *= scale;
    return out;
}

Eigen::MatrixXcd circulant_matrix(const TorusGrid& grid,
                                  const std::vector<cdouble>& symbol) {
    const std::int64_t N = grid.point_count();
    std::vector<cdouble> c = circulant_column(grid, symbol);
    Eigen::MatrixXcd M(N, N);
    const std::int64_t n = grid.points_per_axis();
    if (grid.dim() == 1) {
        for (std::int64_t x = 0; x < N; ++x)
            for (std::int64_t y = 0; y < N; ++y)
                M(x, y) = c[static_cast<std::size_t>((x - y + n) % n)];
    } else {
        for (std::int64_t x = 0; x < N; ++x) {
            const std::int64_t x0 = x / n, x1 = x % n;
            for (std::int64_t y = 0; y < N; ++y) {
                const std::int64_t r0 = (x0 - y / n + n) % n;
                const std::int64_t r1 = (x1 - y % n + n) % n;
                M(x, y) = c[static_cast<std::size_t>(r0 * n + r1)];
            }
        }
    }
    return M;
}

double max_abs(const Eigen::MatrixXcd& M) { return M.cwiseAbs().maxCoeff(); }

void check_hermitian(const Eigen::MatrixXcd& M, double tol, const char* what) {
    double dev = max_abs(M - M.adjoint());
    if (dev > tol * (1.0 + max_abs(M)))
        throw InvalidOperator(std::string(what) + ": not self-adjoint, deviation " +
                              std::to_string(dev));
}

Eigen::VectorXd real_symbol_or_throw(const std::vector<cdouble>& symbol) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(symbol.size()));
    for (std::size_t i = 0; i < symbol.size(); ++i) {
        if (std::abs(symbol[i].imag()) > 1e-12 * (1.0 + std::abs(symbol[i])))
            throw InvalidOperator("symbol is not real; operator not self-adjoint");
        out(static_cast<Eigen::Index>(i)) = symbol[i].real();
    }
    return out;
}

LinearGridOperator spectral_from_dense(const TorusGrid& grid,
                                       const Eigen::MatrixXcd& M) {
    check_hermitian(M, 1e-10, "eigendecompose");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
    if (es.info() != Eigen::Success)
        throw NumericalFailure("eigensolver failed to converge");
    const Eigen::VectorXd lam = es.eigenvalues();
    const Eigen::MatrixXcd U = es.eigenvectors();
    double scale = 1.0 + lam.cwiseAbs().maxCoeff();
    Eigen::VectorXcd lamc = lam.cast<cdouble>();
    double resid = max_abs(M - U * lamc.asDiagonal() * U.adjoint());
    if (resid > 1e-8 * scale)
        throw NumericalFailure("eigendecomposition residual " + std::to_string(resid) +
                               " exceeds tolerance at scale " + std::to_string(scale));
    Eigen::VectorXcd mult = lam.cast<cdouble>();
    return LinearGridOperator::from_spectral(grid, lam, U, mult);
}

} // namespace

OperatorSpec::OperatorSpec(TorusGrid grid, Kind kind)
    : grid_(std::move(grid)), kind_(std::move(kind)) {}

OperatorSpec OperatorSpec::fractional(const TorusGrid& g, double alpha) {
    if (!(alpha > 0)) throw InvalidArgument("fractional order alpha must be positive");
    return {g, FractionalKind{alpha}};
}

OperatorSpec OperatorSpec::polyharmonic(const TorusGrid& g, int k) {
    if (k < 1) throw InvalidArgument("polyharmonic order k must be >= 1");
    return {g, PolyharmonicKind{k}};
}

std::optional<double> OperatorSpec::homogeneity_order() const {
    if (std::holds_alternative<LaplacianKind>(kind_)) return 2.0;
    if (const auto* f = std::get_if<FractionalKind>(&kind_)) return 2.0 * f->alpha;
    if (const auto* p = std::get_if<PolyharmonicKind>(&kind_)) return 2.0 * p->k;
    return std::nullopt;
}

LinearGridOperator LinearGridOperator::from_symbol(const TorusGrid& grid,
                                                   std::vector<cdouble> symbol) {
    if (static_cast<std::int64_t>(symbol.size()) != grid.point_count())
        throw InvalidArgument("symbol size does not match grid");
    LinearGridOperator op;
    op.rep_ = Representation::symbol;
    op.grid_ = grid;
    op.symbol_ = std::move(symbol);
    op.selfadjoint_ = std::all_of(op.symbol_.begin(), op.symbol_.end(), [](cdouble v) {
        return std::abs(v.imag()) <= 1e-14 * (1.0 + std::abs(v));
    });
    return op;
}

LinearGridOperator LinearGridOperator::from_value_matrix(const TorusGrid& grid,
                                                         Eigen::MatrixXcd value_matrix) {
    if (value_matrix.rows() != grid.point_count() ||
        value_matrix.cols() != grid.point_count())
        throw InvalidArgument("value matrix size does not match grid");
    LinearGridOperator op;
    op.rep_ = Representation::kernel;
    op.grid_ = grid;
    op.matrix_ = std::move(value_matrix);
    op.selfadjoint_ =
        max_abs(op.matrix_ - op.matrix_.adjoint()) <= 1e-10 * (1.0 + max_abs(op.matrix_));
    return op;
}

LinearGridOperator LinearGridOperator::from_spectral(const TorusGrid& grid,
                                                     Eigen::VectorXd eigenvalues,
                                                     Eigen::MatrixXcd basis,
                                                     Eigen::VectorXcd multipliers) {
    const auto N = grid.point_count();
    if (eigenvalues.size() != N || basis.rows() != N || basis.cols() != N ||
        multipliers.size() != N)
        throw InvalidArgument("spectral data size does not match grid");
    double gram_dev =
        (basis.adjoint() * basis - Eigen::MatrixXcd::Identity(N, N)).cwiseAbs().maxCoeff();
    if (gram_dev > 1e-8)
        throw InvalidOperator("eigenvector Gram matrix deviates from identity by " +
                              std::to_string(gram_dev));
    LinearGridOperator op;
    op.rep_ = Representation::spectral;
    op.grid_ = grid;
    op.eigenvalues_ = std::move(eigenvalues);
    op.basis_ = std::move(basis);
    op.multipliers_ = std::move(multipliers);
    op.selfadjoint_ = std::all_of(
        op.multipliers_.data(), op.multipliers_.data() + op.multipliers_.size(),
        [](cdouble v) { return std::abs(v.imag()) <= 1e-14 * (1.0 + std::abs(v)); });
    return op;
}

GridFunction LinearGridOperator::apply(const GridFunction& f) const {
    if (!(f.grid() == grid_)) throw InvalidArgument("operand grid mismatch");
    switch (rep_) {
        case Representation::symbol: {
            GridFunction hat = fourier_transform(f, FourierDirection::forward);
            for (std::int64_t i = 0; i < hat.size(); ++i)
                hat[i] *= symbol_[static_cast<std::size_t>(i)];
            return fourier_transform(hat, FourierDirection::inverse);
        }
        case Representation::kernel: {
            Eigen::Map<const Eigen::VectorXcd> x(f.values().data(), f.size());
            Eigen::VectorXcd y = matrix_ * x;
            GridFunction out(grid_);
            Eigen::Map<Eigen::VectorXcd>(out.values().data(), out.size()) = y;
            return out;
        }
        case Representation::spectral: {
            Eigen::Map<const Eigen::VectorXcd> x(f.values().data(), f.size());
            Eigen::VectorXcd coeff = basis_.adjoint() * x;
            coeff.array() *= multipliers_.array();
            Eigen::VectorXcd y = basis_ * coeff;
            GridFunction out(grid_);
            Eigen::Map<Eigen::VectorXcd>(out.values().data(), out.size()) = y;
            return out;
        }
    }
    throw Error("unreachable");
}

Eigen::MatrixXcd LinearGridOperator::value_matrix(std::int64_t cap) const {
    check_dense_cap(grid_, cap);
    switch (rep_) {
        case Representation::symbol: return circulant_matrix(grid_, symbol_);
        case Representation::kernel: return matrix_;
        case Representation::spectral:
            return basis_ * multipliers_.asDiagonal() * basis_.adjoint();
    }
    throw Error("unreachable");
}

Eigen::MatrixXcd LinearGridOperator::kernel_matrix(std::int64_t cap) const {
    return value_matrix(cap) / grid_.cell_measure();
}

const std::vector<cdouble>& LinearGridOperator::symbol() const {
    if (rep_ != Representation::symbol)
        throw InvalidArgument("operator has no symbol representation");
    return symbol_;
}

const Eigen::VectorXd& LinearGridOperator::eigenvalues() const {
    if (rep_ != Representation::spectral)
        throw InvalidArgument("operator has no spectral representation");
    return eigenvalues_;
}

const Eigen::MatrixXcd& LinearGridOperator::basis() const {
    if (rep_ != Representation::spectral)
        throw InvalidArgument("operator has no spectral representation");
    return basis_;
}

const Eigen::VectorXcd& LinearGridOperator::multipliers() const {
    if (rep_ != Representation::spectral)
        throw InvalidArgument("operator has no spectral representation");
    return multipliers_;
}

std::pair<double, double> LinearGridOperator::spectral_range() const {
    if (rep_ == Representation::symbol) {
        Eigen::VectorXd s = real_symbol_or_throw(symbol_);
        return {s.minCoeff(), s.maxCoeff()};
    }
    if (rep_ == Representation::spectral)
        return {eigenvalues_.minCoeff(), eigenvalues_.maxCoeff()};
    throw InvalidArgument("kernel representation: eigendecompose first");
}

LinearGridOperator build_operator(const OperatorSpec& spec, std::int64_t dense_cap) {
    const TorusGrid& grid = spec.grid();
    const std::int64_t N = grid.point_count();

    if (std::holds_alternative<LaplacianKind>(spec.kind()) ||
        std::holds_alternative<FractionalKind>(spec.kind()) ||
        std::holds_alternative<PolyharmonicKind>(spec.kind())) {
        const double m = *spec.homogeneity_order();
        std::vector<cdouble> sym(static_cast<std::size_t>(N));
        for (std::int64_t i = 0; i < N; ++i) {
            double nsq = frequency_norm_sq(grid, i);
            sym[static_cast<std::size_t>(i)] =
                m == 2.0 ? nsq : std::pow(nsq, m / 2.0);
        }
        return LinearGridOperator::from_symbol(grid, std::move(sym));
    }

    if (const auto* s = std::get_if<SchrodingerKind>(&spec.kind())) {
        check_dense_cap(grid, dense_cap);
        std::vector<cdouble> lap(static_cast<std::size_t>(N));
        for (std::int64_t i = 0; i < N; ++i)
            lap[static_cast<std::size_t>(i)] = frequency_norm_sq(grid, i);
        Eigen::MatrixXcd M = circulant_matrix(grid, lap);
        std::vector<double> V = s->V.sample(grid);
        for (std::int64_t i = 0; i < N; ++i) M(i, i) += V[static_cast<std::size_t>(i)];
        M = 0.5 * (M + M.adjoint()).eval();
        return spectral_from_dense(grid, M);
    }

    if (const auto* ms = std::get_if<MagneticSchrodingerKind>(&spec.kind())) {
        check_dense_cap(grid, dense_cap);
        if (static_cast<int>(ms->A.size()) != grid.dim())
            throw InvalidArgument("magnetic potential needs one component per axis");
        Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(N, N);
        for (int axis = 0; axis < grid.dim(); ++axis) {
            // i d/dx_l has the real symbol -xi_l, so P_l = i d/dx_l + A_l is
            // self-adjoint and H = sum_l P_l^2 + V reduces to |xi|^2 when
            // A = 0.
            std::vector<cdouble> sym(static_cast<std::size_t>(N));
            const std::int64_t n = grid.points_per_axis();
            for (std::int64_t i = 0; i < N; ++i) {
                std::int64_t j = grid.dim() == 1 ? i : (axis == 0 ? i / n : i % n);
                sym[static_cast<std::size_t>(i)] = -frequency(grid, j);
            }
            Eigen::MatrixXcd P = circulant_matrix(grid, sym);
            std::vector<double> a = ms->A[static_cast<std::size_t>(axis)].sample(grid);
            for (std::int64_t i = 0; i < N; ++i) P(i, i) += a[static_cast<std::size_t>(i)];
            H += P * P;
        }
        std::vector<double> V = ms->V.sample(grid);
        for (std::int64_t i = 0; i < N; ++i) H(i, i) += V[static_cast<std::size_t>(i)];
        Eigen::MatrixXcd Hs = 0.5 * (H + H.adjoint());
        if (max_abs(Hs - H) > 1e-10 * (1.0 + max_abs(H)))
            throw InvalidOperator("magnetic assembly produced a non-self-adjoint matrix");
        return spectral_from_dense(grid, Hs);
    }

    const auto& ck = std::get<CustomKernelKind>(spec.kind());
    if (ck.kernel.rows() != N || ck.kernel.cols() != N)
        throw InvalidArgument("custom kernel size does not match grid");
    if (max_abs(ck.kernel - ck.kernel.adjoint()) > 1e-10 * (1.0 + max_abs(ck.kernel)))
        throw InvalidOperator("custom kernel is not self-adjoint");
    check_dense_cap(grid, dense_cap);
    return LinearGridOperator::from_value_matrix(grid, grid.cell_measure() * ck.kernel);
}

LinearGridOperator eigendecompose(const LinearGridOperator& A, std::int64_t cap) {
    const TorusGrid& grid = A.grid();
    if (A.representation() == Representation::symbol) {
        if (!A.selfadjoint()) throw InvalidOperator("eigendecompose needs self-adjointness");
        check_dense_cap(grid, cap);
        const std::int64_t N = grid.point_count();
        Eigen::VectorXd s = real_symbol_or_throw(A.symbol());
        std::vector<std::int64_t> order(static_cast<std::size_t>(N));
        for (std::int64_t i = 0; i < N; ++i) order[static_cast<std::size_t>(i)] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
            return s(a) < s(b);
        });
        Eigen::VectorXd lam(N);
        Eigen::MatrixXcd U(N, N);
        const double norm = 1.0 / std::sqrt(static_cast<double>(N));
        const std::int64_t n = grid.points_per_axis();
        const double two_pi = 2.0 * std::numbers::pi;
        for (std::int64_t col = 0; col < N; ++col) {
            const std::int64_t k = order[static_cast<std::size_t>(col)];
            lam(col) = s(k);
            const std::int64_t k0 = grid.dim() == 1 ? k : k / n;
            const std::int64_t k1 = grid.dim() == 1 ? 0 : k % n;
            for (std::int64_t x = 0; x < N; ++x) {
                const std::int64_t x0 = grid.dim() == 1 ? x : x / n;
                const std::int64_t x1 = grid.dim() == 1 ? 0 : x % n;
                double phase = two_pi *
                               (static_cast<double>(k0 * x0) + static_cast<double>(k1 * x1)) /
                               static_cast<double>(n);
                U(x, col) = norm * cdouble(std::cos(phase), std::sin(phase));
            }
        }
        return LinearGridOperator::from_spectral(grid, lam, U, lam.cast<cdouble>());
    }
    if (A.representation() == Representation::spectral) return A;
    if (!A.selfadjoint()) throw InvalidOperator("eigendecompose needs self-adjointness");
    return spectral_from_dense(grid, A.value_matrix(cap));
}

LinearGridOperator apply_spectral_function(const LinearGridOperator& A,
                                           const std::function<cdouble(double)>& g,
                                           int scale_k) {
    if (!A.selfadjoint())
        throw InvalidOperator("functional calculus needs a self-adjoint operator");
    const double scale = std::ldexp(1.0, -scale_k);
    auto eval = [&](double lambda) {
        cdouble v = g(scale * lambda);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw InvalidArgument("function undefined on spectrum at lambda=" +
                                  std::to_string(lambda));
        return v;
    };
    if (A.representation() == Representation::symbol) {
        Eigen::VectorXd s = real_symbol_or_throw(A.symbol());
        std::vector<cdouble> sym(static_cast<std::size_t>(s.size()));
        for (Eigen::Index i = 0; i < s.size(); ++i)
            sym[static_cast<std::size_t>(i)] = eval(s(i));
        return LinearGridOperator::from_symbol(A.grid(), std::move(sym));
    }
    if (A.representation() == Representation::spectral) {
        Eigen::VectorXcd mult(A.eigenvalues().size());
        for (Eigen::Index i = 0; i < mult.size(); ++i) mult(i) = eval(A.eigenvalues()(i));
        return LinearGridOperator::from_spectral(A.grid(), A.eigenvalues(), A.basis(),
                                                 std::move(mult));
    }
    throw InvalidArgument("functional calculus needs a symbol or spectral representation");
}

LinearGridOperator resolvent_power_quadrature(const LinearGridOperator& A, double beta,
                                              int initial_nodes) {
    if (!(beta > 0)) throw InvalidArgument("resolvent power beta must be positive");
    LinearGridOperator base = A.representation() == Representation::kernel
                                  ? eigendecompose(A)
                                  : A;
    auto [lo, hi] = base.spectral_range();
    if (lo < -1e-10)
        throw InvalidOperator("spectrum dips below zero: min lambda = " +
                              std::to_string(lo));

    const double gamma_beta = std::tgamma(beta);
    auto quad_values = [&](const QuadratureRule& rule, const Eigen::VectorXd& lam) {
        Eigen::VectorXd out = Eigen::VectorXd::Zero(lam.size());
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            out += (rule.weights[i] / gamma_beta) *
                   (-rule.nodes[i] * lam.array()).exp().matrix();
        return out;
    };

    Eigen::VectorXd lam;
    if (base.representation() == Representation::symbol)
        lam = real_symbol_or_throw(base.symbol());
    else
        lam = base.eigenvalues();
    lam = lam.cwiseMax(0.0);

    int nodes = std::max(initial_nodes, 4);
    Eigen::VectorXd cur = quad_values(gauss_laguerre(nodes, beta - 1.0), lam);
    for (;;) {
        if (nodes > 2048)
            throw NumericalFailure("Laguerre quadrature did not stabilize by 2048 nodes");
        Eigen::VectorXd next = quad_values(gauss_laguerre(2 * nodes, beta - 1.0), lam);
        double dev = (next - cur).cwiseAbs().maxCoeff();
        double ref = next.cwiseAbs().maxCoeff();
        cur = next;
        nodes *= 2;
        if (dev <= 1e-8 * std::max(ref, 1e-300)) break;
    }

    if (base.representation() == Representation::symbol) {
        std::vector<cdouble> sym(static_cast<std::size_t>(cur.size()));
        for (Eigen::Index i = 0; i < cur.size(); ++i)
            sym[static_cast<std::size_t>(i)] = cur(i);
        return LinearGridOperator::from_symbol(base.grid(), std::move(sym));
    }
    return LinearGridOperator::from_spectral(base.grid(), base.eigenvalues(), base.basis(),
                                             cur.cast<cdouble>());
}

LinearGridOperator heat_operator(const LinearGridOperator& H, double t) {
    return apply_spectral_function(H, [t](double l) { return cdouble(std::exp(-t * l)); });
}

LinearGridOperator schrodinger_group(const LinearGridOperator& H, double t) {
    return apply_spectral_function(H, [t](double l) {
        return std::exp(cdouble(0.0, -t * l));
    });
}

LinearGridOperator resolvent_operator(const LinearGridOperator& H) {
    return apply_spectral_function(H, [](double l) { return cdouble(1.0 / (1.0 + l)); });
}

LinearGridOperator identity_operator(const TorusGrid& grid) {
    return LinearGridOperator::from_symbol(
        grid, std::vector<cdouble>(static_cast<std::size_t>(grid.point_count()), 1.0));
}

double nonnegative_shift(const LinearGridOperator& H) {
    auto [lo, hi] = H.spectral_range();
    (void)hi;
    return lo < 0.0 ? -lo + 1e-6 : 0.0;
}

LinearGridOperator shifted(const LinearGridOperator& H, double c) {
    if (c == 0.0) return H;
    if (H.representation() == Representation::symbol) {
        std::vector<cdouble> sym = H.symbol();
        for (auto& v : sym) v += c;
        return LinearGridOperator::from_symbol(H.grid(), std::move(sym));
    }
    LinearGridOperator base =
        H.representation() == Representation::kernel ? eigendecompose(H) : H;
    Eigen::VectorXd lam = base.eigenvalues().array() + c;
    Eigen::VectorXcd mult = base.multipliers().array() + cdouble(c);
    return LinearGridOperator::from_spectral(base.grid(), lam, base.basis(), mult);
}

double kernel_tail_fraction(const LinearGridOperator& A, double radius_fraction,
                            std::int64_t cap) {
    const TorusGrid& grid = A.grid();
    const double radius = radius_fraction * grid.side_length();
    if (A.representation() == Representation::symbol) {
        // Circulant: every column has the same |mass| profile.
        std::vector<cdouble> c = circulant_column(grid, A.symbol());
        double total = 0.0, tail = 0.0;
        for (std::int64_t r = 0; r < grid.point_count(); ++r) {
            double a = std::abs(c[static_cast<std::size_t>(r)]);
            total += a;
            if (grid.point_distance(r, 0) > radius) tail += a;
        }
        return total > 0.0 ? tail / total : 0.0;
    }
    Eigen::MatrixXcd M = A.value_matrix(cap);
    double worst = 0.0;
    for (Eigen::Index y = 0; y < M.cols(); ++y) {
        double total = 0.0, tail = 0.0;
        for (Eigen::Index x = 0; x < M.rows(); ++x) {
            double a = std::abs(M(x, y));
            total += a;
            if (grid.point_distance(x, y) > radius) tail += a;
        }
        if (total > 0.0) worst = std::max(worst, tail / total);
    }
    return worst;
}

void require_localized(const LinearGridOperator& A, double tol, double radius_fraction,
                       std::int64_t cap) {
    double frac = kernel_tail_fraction(A, radius_fraction, cap);
    if (frac > tol)
        throw UnsafeTime("kernel tail mass fraction " + std::to_string(frac) +
                         " beyond radius " + std::to_string(radius_fraction) +
                         "*L exceeds tolerance " + std::to_string(tol));
}

void write_operator(const LinearGridOperator& A, std::ostream& out) {
    const TorusGrid& grid = A.grid();
    const std::int32_t tag = A.representation() == Representation::symbol ? 0 : 1;
    const std::int32_t d = grid.dim();
    const std::int64_t n = grid.points_per_axis();
    const double L = grid.side_length();
    out.write(reinterpret_cast<const char*>(&tag), sizeof tag);
    out.write(reinterpret_cast<const char*>(&d), sizeof d);
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    out.write(reinterpret_cast<const char*>(&L), sizeof L);
    auto put = [&](cdouble v) {
        double re = v.real(), im = v.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof re);
        out.write(reinterpret_cast<const char*>(&im), sizeof im);
    };
    if (tag == 0) {
        for (cdouble v : A.symbol()) put(v);
    } else {
        Eigen::MatrixXcd K = A.kernel_matrix();
        for (Eigen::Index x = 0; x < K.rows(); ++x)
            for (Eigen::Index y = 0; y < K.cols(); ++y) put(K(x, y));
    }
}

LinearGridOperator read_operator(std::istream& in) {
    std::int32_t tag = 0, d = 0;
    std::int64_t n = 0;
    double L = 0;
    in.read(reinterpret_cast<char*>(&tag), sizeof tag);
    in.read(reinterpret_cast<char*>(&d), sizeof d);
    in.read(reinterpret_cast<char*>(&n), sizeof n);
    in.read(reinterpret_cast<char*>(&L), sizeof L);
    if (!in) throw InvalidData("truncated operator header");
    TorusGrid grid = make_grid(d, n, L);
    auto get = [&]() {
        double re = 0, im = 0;
        in.read(reinterpret_cast<char*>(&re), sizeof re);
        in.read(reinterpret_cast<char*>(&im), sizeof im);
        if (!in) throw InvalidData("truncated operator payload");
        return cdouble(re, im);
    };
    const std::int64_t N = grid.point_count();
    if (tag == 0) {
        std::vector<cdouble> sym(static_cast<std::size_t>(N));
        for (auto& v : sym) v = get();
        return LinearGridOperator::from_symbol(grid, std::move(sym));
    }
    Eigen::MatrixXcd K(N, N);
    for (std::int64_t x = 0; x < N; ++x)
        for (std::int64_t y = 0; y < N; ++y) K(x, y) = get();
    return LinearGridOperator::from_value_matrix(grid, grid.cell_measure() * K);
}

} // namespace speclab
