#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <optional>

#include "speclab/dyadic.hpp"
#include "speclab/operator.hpp"

namespace speclab {

// ||1_Q A 1_{Q'}||_{L^p -> L^q} over all cube pairs of one dyadic scale.
struct BlockNormMatrix {
    DyadicPartition partition;
    double p = 2.0;
    double q = 2.0;
    Eigen::MatrixXd entries; // (row Q, column Q')
};

struct SchurSums {
    double M1 = 0.0; // sup over Q' of the column sums
    double M2 = 0.0; // sup over Q of the row sums
    std::optional<int> weightN;
    int j = 0;
};

// l^p over cubes of scale j of the local L^q norms. Coincides with
// lp_norm(f, p) when p == q.
double amalgam_norm(const GridFunction& f, double p, double q, int j);

// max{1, 2^{-jd(1/p - 1/q)}}, the X^{p,q}_0 <- X^{p,q}_j embedding constant;
// requires p <= q.
double embedding_constant(double p, double q, int j, int d);

// Exact block entries via the closed forms available for
// (p,q) in {(1,1),(2,2),(inf,inf),(1,inf),(1,2),(2,inf)}.
BlockNormMatrix block_norm_matrix(const LinearGridOperator& A, int j, double p, double q,
                                  std::int64_t cap = kDefaultDenseCap);

// Row/column sup-sums, optionally weighted by (1 + 2^j dist(Q,Q'))^N.
SchurSums schur_sums(const BlockNormMatrix& B, std::optional<int> weightN = std::nullopt);

// M1^{1-theta} M2^theta with 1/p = 1 - theta.
double amalgam_operator_bound(const SchurSums& sums, double p);

// Certified lower bound for ||A||_{X^{p,q}_j -> X^{p,q}_j} from a
// deterministic probe family (random fields, cube indicators, wave packets).
double amalgam_operator_lower_bound(const LinearGridOperator& A, double p, double q,
                                    int j, int probes = 32, std::uint64_t seed = 1);

// CSV rows (j, Q index, Q' index, distance, entry).
void write_block_csv(const BlockNormMatrix& B, std::ostream& out);

} // namespace speclab
