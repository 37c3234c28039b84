#include "speclab/amalgam.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "speclab/normest.hpp"

namespace speclab {

namespace {

double local_q_norm(const GridFunction& f, const std::vector<std::int64_t>& points,
                    double q) {
    if (std::isinf(q)) {
        double m = 0.0;
        for (auto i : points) m = std::max(m, std::abs(f[i]));
        return m;
    }
    double acc = 0.0;
    if (q == 2.0) {
        for (auto i : points) acc += std::norm(f[i]);
        return std::sqrt(acc * f.grid().cell_measure());
    }
    if (q == 1.0) {
        for (auto i : points) acc += std::abs(f[i]);
        return acc * f.grid().cell_measure();
    }
    for (auto i : points) acc += std::pow(std::abs(f[i]), q);
    return std::pow(acc * f.grid().cell_measure(), 1.0 / q);
}

} // namespace

double amalgam_norm(const GridFunction& f, double p, double q, int j) {
    if (p < 1.0 || q < 1.0) throw InvalidArgument("amalgam exponents must be >= 1");
    DyadicPartition part = dyadic_partition(f.grid(), j);
    if (std::isinf(p)) {
        double m = 0.0;
        for (const Cube& c : part.cubes())
            m = std::max(m, local_q_norm(f, part.point_indices(c), q));
        return m;
    }
    double acc = 0.0;
    for (const Cube& c : part.cubes())
        acc += std::pow(local_q_norm(f, part.point_indices(c), q), p);
    return std::pow(acc, 1.0 / p);
}

double embedding_constant(double p, double q, int j, int d) {
    if (p > q) throw InvalidArgument("embedding constant requires p <= q");
    double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
    return std::max(1.0, std::exp2(-static_cast<double>(j) * d * (inv_p - inv_q)));
}

BlockNormMatrix block_norm_matrix(const LinearGridOperator& A, int j, double p, double q,
                                  std::int64_t cap) {
    BlockNormMatrix B;
    B.partition = dyadic_partition(A.grid(), j);
    B.p = p;
    B.q = q;
    const std::int64_t nc = B.partition.size();
    Eigen::MatrixXcd M = A.value_matrix(cap);
    const double cell = A.grid().cell_measure();

    std::vector<std::vector<std::int64_t>> points;
    points.reserve(static_cast<std::size_t>(nc));
    for (const Cube& c : B.partition.cubes()) points.push_back(B.partition.point_indices(c));

    B.entries.resize(nc, nc);
    Eigen::MatrixXcd sub;
    for (std::int64_t a = 0; a < nc; ++a) {
        const auto& rows = points[static_cast<std::size_t>(a)];
        for (std::int64_t b = 0; b < nc; ++b) {
            const auto& cols = points[static_cast<std::size_t>(b)];
            sub.resize(static_cast<Eigen::Index>(rows.size()),
                       static_cast<Eigen::Index>(cols.size()));
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t s = 0; s < cols.size(); ++s)
                    sub(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) =
                        M(rows[r], cols[s]);
            B.entries(a, b) = exact_pq_norm(sub, cell, p, q);
        }
    }
    return B;
}

SchurSums schur_sums(const BlockNormMatrix& B, std::optional<int> weightN) {
    SchurSums out;
    out.weightN = weightN;
    out.j = B.partition.scale();
    const std::int64_t nc = B.partition.size();
    const double inv_side = 1.0 / B.partition.cube_side(); // 2^j
    Eigen::MatrixXd W = B.entries;
    if (weightN) {
        for (std::int64_t a = 0; a < nc; ++a)
            for (std::int64_t b = 0; b < nc; ++b) {
                double dist =
                    cube_distance(B.partition, B.partition.cube(a), B.partition.cube(b));
                W(a, b) *= std::pow(1.0 + inv_side * dist, *weightN);
            }
    }
    out.M1 = W.colwise().sum().maxCoeff();
    out.M2 = W.rowwise().sum().maxCoeff();
    return out;
}

double amalgam_operator_bound(const SchurSums& sums, double p) {
    if (p < 1.0) throw InvalidArgument("exponent p must be >= 1");
    double theta = std::isinf(p) ? 1.0 : 1.0 - 1.0 / p;
    return std::pow(sums.M1, 1.0 - theta) * std::pow(sums.M2, theta);
}

double amalgam_operator_lower_bound(const LinearGridOperator& A, double p, double q,
                                    int j, int probes, std::uint64_t seed) {
    const TorusGrid& grid = A.grid();
    DyadicPartition part = dyadic_partition(grid, j);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> pick_cube(0, part.size() - 1);

    double best = 0.0;
    auto consider = [&](const GridFunction& f) {
        double nf = amalgam_norm(f, p, q, j);
        if (nf == 0.0) return;
        best = std::max(best, amalgam_norm(A.apply(f), p, q, j) / nf);
    };

    // Single-cube indicators probe the l^p head of the norm.
    for (std::int64_t c = 0; c < std::min<std::int64_t>(part.size(), probes); ++c)
        consider(restrict_to_cube(constant_function(grid), part, part.cube(c)));

    for (int k = 0; k < probes; ++k) {
        if (k % 3 == 0) {
            consider(random_function(grid, seed + 1000 + static_cast<std::uint64_t>(k)));
        } else if (k % 3 == 1) {
            // Cube-localized random data.
            GridFunction f = random_function(grid, seed + 2000 + static_cast<std::uint64_t>(k));
            consider(restrict_to_cube(f, part, part.cube(pick_cube(rng))));
        } else {
            // Wave packet.
            double c0[2] = {unif(rng) * grid.side_length(), unif(rng) * grid.side_length()};
            double s = grid.side_length() * (0.02 + 0.15 * unif(rng));
            double xi = (unif(rng) - 0.5) * std::numbers::pi / grid.spacing();
            GridFunction f(grid);
            for (std::int64_t i = 0; i < grid.point_count(); ++i) {
                double r = grid.point_distance_to(i, c0);
                double arg = xi * grid.axis_coord(grid.axis_index(i, 0));
                f[i] = std::exp(-r * r / (s * s)) * cdouble(std::cos(arg), std::sin(arg));
            }
            consider(f);
        }
    }
    return best;
}

void write_block_csv(const BlockNormMatrix& B, std::ostream& out) {
    out << "j,Q,Qp,distance,entry\n";
    std::ostringstream line;
    line.precision(17);
    for (std::int64_t a = 0; a < B.partition.size(); ++a)
        for (std::int64_t b = 0; b < B.partition.size(); ++b) {
            line.str("");
            line << B.partition.scale() << ',' << a << ',' << b << ','
                 << cube_distance(B.partition, B.partition.cube(a), B.partition.cube(b))
                 << ',' << B.entries(a, b) << '\n';
            out << line.str();
        }
}

} // namespace speclab
