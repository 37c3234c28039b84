#pragma once

#include <Eigen/Dense>

#include <functional>
#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

#include "speclab/bump.hpp"
#include "speclab/fourier.hpp"
#include "speclab/grid.hpp"
#include "speclab/potential.hpp"

namespace speclab {

inline constexpr std::int64_t kDefaultDenseCap = 4096;

struct LaplacianKind {};
struct FractionalKind {
    double alpha = 1.0;
};
struct PolyharmonicKind {
    int k = 1;
};
struct SchrodingerKind {
    PotentialSpec V;
};
struct MagneticSchrodingerKind {
    std::vector<PotentialSpec> A;
    PotentialSpec V;
};
struct CustomKernelKind {
    Eigen::MatrixXcd kernel; // continuum-normalized K(x,y)
};

class OperatorSpec {
  public:
    using Kind = std::variant<LaplacianKind, FractionalKind, PolyharmonicKind,
                              SchrodingerKind, MagneticSchrodingerKind, CustomKernelKind>;

    OperatorSpec(TorusGrid grid, Kind kind);

    static OperatorSpec laplacian(const TorusGrid& g) { return {g, LaplacianKind{}}; }
    static OperatorSpec fractional(const TorusGrid& g, double alpha);
    static OperatorSpec polyharmonic(const TorusGrid& g, int k);
    static OperatorSpec schrodinger(const TorusGrid& g, PotentialSpec V) {
        return {g, SchrodingerKind{std::move(V)}};
    }
    static OperatorSpec magnetic_schrodinger(const TorusGrid& g,
                                             std::vector<PotentialSpec> A,
                                             PotentialSpec V) {
        return {g, MagneticSchrodingerKind{std::move(A), std::move(V)}};
    }
    static OperatorSpec custom_kernel(const TorusGrid& g, Eigen::MatrixXcd kernel) {
        return {g, CustomKernelKind{std::move(kernel)}};
    }

    const TorusGrid& grid() const { return grid_; }
    const Kind& kind() const { return kind_; }

    // Homogeneity order m of the symbol (2, 2 alpha, 2 k); empty for
    // non-homogeneous kinds.
    std::optional<double> homogeneity_order() const;

  private:
    TorusGrid grid_;
    Kind kind_;
};

enum class Representation { symbol, kernel, spectral };

// A linear operator on grid functions. Three interchangeable carriers:
//   symbol    g(xi) on the frequency grid, applied by FFT sandwich;
//   kernel    the value-space matrix M with (Af)_x = sum_y M_{xy} f_y,
//             i.e. M = h^d K for the continuum kernel K(x,y);
//   spectral  a plain-unitary eigenbasis with real generator eigenvalues and
//             complex multiplier values (multipliers == eigenvalues for the
//             generator itself).
class LinearGridOperator {
  public:
    LinearGridOperator() = default;

    static LinearGridOperator from_symbol(const TorusGrid& grid,
                                          std::vector<cdouble> symbol);
    static LinearGridOperator from_value_matrix(const TorusGrid& grid,
                                                Eigen::MatrixXcd value_matrix);
    static LinearGridOperator from_spectral(const TorusGrid& grid,
                                            Eigen::VectorXd eigenvalues,
                                            Eigen::MatrixXcd basis,
                                            Eigen::VectorXcd multipliers);

    Representation representation() const { return rep_; }
    const TorusGrid& grid() const { return grid_; }
    bool selfadjoint() const { return selfadjoint_; }

    GridFunction apply(const GridFunction& f) const;

    // Value-space matrix M (= h^d K). Dense; guarded by the capacity cap on
    // the number of grid points.
    Eigen::MatrixXcd value_matrix(std::int64_t cap = kDefaultDenseCap) const;
    // Continuum kernel K(x,y) = M / h^d.
    Eigen::MatrixXcd kernel_matrix(std::int64_t cap = kDefaultDenseCap) const;

    const std::vector<cdouble>& symbol() const;
    const Eigen::VectorXd& eigenvalues() const;
    const Eigen::MatrixXcd& basis() const;
    const Eigen::VectorXcd& multipliers() const;

    // [min, max] of the real spectrum of the generator (symbol values or
    // eigenvalues); kernel representations must be eigendecomposed first.
    std::pair<double, double> spectral_range() const;

  private:
    Representation rep_ = Representation::symbol;
    TorusGrid grid_;
    bool selfadjoint_ = false;
    std::vector<cdouble> symbol_;
    Eigen::MatrixXcd matrix_;      // kernel rep: value matrix M
    Eigen::VectorXd eigenvalues_;  // spectral rep
    Eigen::MatrixXcd basis_;       // spectral rep, plain-unitary columns
    Eigen::VectorXcd multipliers_; // spectral rep
};

LinearGridOperator build_operator(const OperatorSpec& spec,
                                  std::int64_t dense_cap = kDefaultDenseCap);

// Dense eigendecomposition (or the exact Fourier diagonalization for symbol
// operators). Result is a spectral representation with ascending eigenvalues.
LinearGridOperator eigendecompose(const LinearGridOperator& A,
                                  std::int64_t cap = kDefaultDenseCap);

// g(2^{-k} A) through the functional calculus; A must carry a symbol or
// spectral representation and be self-adjoint. g returning non-finite values
// on the spectrum is a domain error.
LinearGridOperator apply_spectral_function(const LinearGridOperator& A,
                                           const std::function<cdouble(double)>& g,
                                           int scale_k = 0);

// (I + A)^{-beta} by generalized Gauss-Laguerre quadrature applied to the
// heat semigroup; node count starts at initial_nodes and doubles until the
// evaluated multiplier stabilizes below 1e-8 relative.
LinearGridOperator resolvent_power_quadrature(const LinearGridOperator& A, double beta,
                                              int initial_nodes = 64);

LinearGridOperator heat_operator(const LinearGridOperator& H, double t);
LinearGridOperator schrodinger_group(const LinearGridOperator& H, double t);
// (I + H)^{-1} through the direct spectral route.
LinearGridOperator resolvent_operator(const LinearGridOperator& H);
LinearGridOperator identity_operator(const TorusGrid& grid);

// Spectral shift making the operator nonnegative: c' = max(0, -min lambda)
// + 1e-6 applied when the bottom of the spectrum dips below zero.
double nonnegative_shift(const LinearGridOperator& H);
LinearGridOperator shifted(const LinearGridOperator& H, double c);

// Worst-case fraction of column L^1 kernel mass at torus distance beyond
// radius_fraction * L from the column's site.
double kernel_tail_fraction(const LinearGridOperator& A, double radius_fraction = 0.25,
                            std::int64_t cap = kDefaultDenseCap);
// Throws UnsafeTime when the tail fraction exceeds tol.
void require_localized(const LinearGridOperator& A, double tol,
                       double radius_fraction = 0.25,
                       std::int64_t cap = kDefaultDenseCap);

// Representation tag + (d, n, L) header + payload: the symbol table on the
// frequency grid or the row-major continuum kernel matrix. Spectral
// operators serialize through their kernel.
void write_operator(const LinearGridOperator& A, std::ostream& out);
LinearGridOperator read_operator(std::istream& in);

} // namespace speclab
