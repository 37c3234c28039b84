#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>

#include "speclab/operator.hpp"

namespace speclab {

// Largest singular value, routed through a Hermitian eigensolve when the
// matrix is (anti-)Hermitian.
double spectral_norm(const Eigen::MatrixXcd& M);

// Exact matrix p-norm for p in {1, 2, inf}. For L^p -> L^p operator norms
// the uniform cell measure cancels, so these act on the value matrix.
double exact_norm(const Eigen::MatrixXcd& M, double p);
double exact_norm(const LinearGridOperator& A, double p,
                  std::int64_t cap = kDefaultDenseCap);

// Exact L^p -> L^q norm of the operator f -> M f on a grid with cell
// measure `cell`; supported pairs are (1,1), (2,2), (inf,inf), (1,inf),
// (1,2), (2,inf). Others raise UnsupportedNormPair.
double exact_pq_norm(const Eigen::MatrixXcd& M, double cell, double p, double q);

struct ProbeOptions {
    int probes = 24;
    int power_iterations = 14;
    std::uint64_t seed = 1;
};

// Best ratio ||Mx||_p / ||x||_p over deterministic probes plus the dual-power
// iteration x <- |M* z|^{p'-1} phase(M* z); every ratio is a certified lower
// bound for the p-norm.
double lower_bound_norm(const Eigen::MatrixXcd& M, double p,
                        const ProbeOptions& opts = {});
double lower_bound_norm(const LinearGridOperator& A, double p,
                        const ProbeOptions& opts = {},
                        std::int64_t cap = kDefaultDenseCap);

// Riesz-Thorin upper bound through the exact endpoint norms: interpolates
// (1,2) for p <= 2 and (2,inf) for p >= 2; equals the exact norm at 1, 2, inf.
double interpolated_upper_bound(const Eigen::MatrixXcd& M, double p);
double interpolated_upper_bound(const LinearGridOperator& A, double p,
                                std::int64_t cap = kDefaultDenseCap);

struct NormBracket {
    double p = 2.0;
    double lower = 0.0;
    double upper = 0.0;
    std::string lower_method;
    std::string upper_method;
    int probe_count = 0;

    double midpoint() const { return 0.5 * (lower + upper); }
    double width() const { return upper - lower; }
};

NormBracket norm_bracket(const Eigen::MatrixXcd& M, double p,
                         const ProbeOptions& opts = {});
NormBracket norm_bracket(const LinearGridOperator& A, double p,
                         const ProbeOptions& opts = {},
                         std::int64_t cap = kDefaultDenseCap);

} // namespace speclab
