#include "speclab/grid.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace speclab {

double conjugate_exponent(double p) {
    if (p < 1.0) throw InvalidArgument("exponent p must be >= 1");
    if (p == 1.0) return kInf;
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

namespace {

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

// Accepts 2^e for integer e of either sign.
bool is_dyadic(double v) {
    if (!(v > 0.0) || !std::isfinite(v)) return false;
    int e = 0;
    double m = std::frexp(v, &e);
    return m == 0.5;
}

} // namespace

TorusGrid make_grid(int d, std::int64_t n, double L, std::int64_t max_points) {
    if (d != 1 && d != 2) throw InvalidArgument("grid dimension must be 1 or 2");
    if (!is_power_of_two(n) || n < 8)
        throw InvalidArgument("points per axis must be a power of two >= 8, got " +
                              std::to_string(n));
    if (!is_dyadic(L))
        throw InvalidArgument("side length must be a power of two");
    std::int64_t total = d == 1 ? n : n * n;
    if (total > max_points)
        throw CapacityError("grid would hold " + std::to_string(total) +
                            " points, cap is " + std::to_string(max_points));
    TorusGrid g;
    g.d_ = d;
    g.n_ = n;
    g.L_ = L;
    g.h_ = L / static_cast<double>(n);
    g.cell_ = d == 1 ? g.h_ : g.h_ * g.h_;
    g.total_ = total;
    return g;
}

double TorusGrid::lift(double x) const {
    double y = std::fmod(x, L_);
    if (y < -L_ / 2) y += L_;
    if (y >= L_ / 2) y -= L_;
    return y;
}

double TorusGrid::point_distance(std::int64_t i, std::int64_t j) const {
    if (d_ == 1) return axis_distance(axis_coord(i), axis_coord(j));
    double dx = axis_distance(axis_coord(i / n_), axis_coord(j / n_));
    double dy = axis_distance(axis_coord(i % n_), axis_coord(j % n_));
    return std::hypot(dx, dy);
}

double TorusGrid::point_distance_to(std::int64_t i, const double* c) const {
    if (d_ == 1) return axis_distance(axis_coord(i), c[0]);
    double dx = axis_distance(axis_coord(i / n_), c[0]);
    double dy = axis_distance(axis_coord(i % n_), c[1]);
    return std::hypot(dx, dy);
}

GridFunction::GridFunction(const TorusGrid& grid, std::vector<cdouble> values)
    : grid_(grid), values_(std::move(values)) {
    if (static_cast<std::int64_t>(values_.size()) != grid_.point_count())
        throw InvalidArgument("value count does not match grid point count");
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
    if (!(grid_ == o.grid_)) throw InvalidArgument("grid mismatch in +=");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
    if (!(grid_ == o.grid_)) throw InvalidArgument("grid mismatch in -=");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

GridFunction& GridFunction::operator*=(cdouble c) {
    for (auto& v : values_) v *= c;
    return *this;
}

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
GridFunction operator*(cdouble c, GridFunction f) { return f *= c; }

double lp_norm(const GridFunction& f, double p) {
    if (p < 1.0) throw InvalidArgument("lp_norm requires p >= 1");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& v : f.values()) {
            double a = std::abs(v);
            if (std::isnan(a)) throw InvalidData("NaN value in lp_norm");
            m = std::max(m, a);
        }
        return m;
    }
    double acc = 0.0;
    if (p == 2.0) {
        for (const auto& v : f.values()) {
            double a = std::norm(v);
            if (std::isnan(a)) throw InvalidData("NaN value in lp_norm");
            acc += a;
        }
        return std::sqrt(acc * f.grid().cell_measure());
    }
    if (p == 1.0) {
        for (const auto& v : f.values()) {
            double a = std::abs(v);
            if (std::isnan(a)) throw InvalidData("NaN value in lp_norm");
            acc += a;
        }
        return acc * f.grid().cell_measure();
    }
    for (const auto& v : f.values()) {
        double a = std::abs(v);
        if (std::isnan(a)) throw InvalidData("NaN value in lp_norm");
        acc += std::pow(a, p);
    }
    return std::pow(acc * f.grid().cell_measure(), 1.0 / p);
}

cdouble inner_product(const GridFunction& f, const GridFunction& g) {
    if (!(f.grid() == g.grid())) throw InvalidArgument("grid mismatch in inner_product");
    cdouble acc = 0.0;
    for (std::int64_t i = 0; i < f.size(); ++i) acc += std::conj(f[i]) * g[i];
    return acc * f.grid().cell_measure();
}

GridFunction unit_impulse(const TorusGrid& grid, std::int64_t at) {
    GridFunction f(grid);
    f[at] = 1.0;
    return f;
}

GridFunction constant_function(const TorusGrid& grid, cdouble value) {
    GridFunction f(grid);
    std::fill(f.values().begin(), f.values().end(), value);
    return f;
}

GridFunction random_function(const TorusGrid& grid, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    GridFunction f(grid);
    for (auto& v : f.values()) v = cdouble(gauss(rng), gauss(rng));
    return f;
}

namespace {

struct BinaryHeader {
    std::int32_t d;
    std::int64_t n;
    double L;
};

} // namespace

void write_binary(const GridFunction& f, std::ostream& out) {
    BinaryHeader hdr{f.grid().dim(), f.grid().points_per_axis(), f.grid().side_length()};
    out.write(reinterpret_cast<const char*>(&hdr.d), sizeof hdr.d);
    out.write(reinterpret_cast<const char*>(&hdr.n), sizeof hdr.n);
    out.write(reinterpret_cast<const char*>(&hdr.L), sizeof hdr.L);
    for (const auto& v : f.values()) {
        double re = v.real(), im = v.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof re);
        out.write(reinterpret_cast<const char*>(&im), sizeof im);
    }
}

GridFunction read_binary(std::istream& in) {
    BinaryHeader hdr{};
    in.read(reinterpret_cast<char*>(&hdr.d), sizeof hdr.d);
    in.read(reinterpret_cast<char*>(&hdr.n), sizeof hdr.n);
    in.read(reinterpret_cast<char*>(&hdr.L), sizeof hdr.L);
    if (!in) throw InvalidData("truncated grid-function header");
    TorusGrid grid = make_grid(hdr.d, hdr.n, hdr.L);
    GridFunction f(grid);
    for (auto& v : f.values()) {
        double re = 0, im = 0;
        in.read(reinterpret_cast<char*>(&re), sizeof re);
        in.read(reinterpret_cast<char*>(&im), sizeof im);
        if (!in) throw InvalidData("truncated grid-function payload");
        v = cdouble(re, im);
    }
    return f;
}

void write_csv(const GridFunction& f, std::ostream& out) {
    out << "d,n,L\n"
        << f.grid().dim() << ',' << f.grid().points_per_axis() << ','
        << f.grid().side_length() << "\nre,im\n";
    std::ostringstream line;
    line.precision(17);
    for (const auto& v : f.values()) {
        line.str("");
        line << v.real() << ',' << v.imag() << '\n';
        out << line.str();
    }
}

GridFunction read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InvalidData("empty CSV");
    int d = 0;
    std::int64_t n = 0;
    double L = 0;
    char comma = 0;
    if (!std::getline(in, line)) throw InvalidData("missing CSV header row");
    std::istringstream hdr(line);
    hdr >> d >> comma >> n >> comma >> L;
    if (!hdr) throw InvalidData("bad CSV header row");
    if (!std::getline(in, line)) throw InvalidData("missing CSV column row");
    TorusGrid grid = make_grid(d, n, L);
    GridFunction f(grid);
    for (auto& v : f.values()) {
        if (!std::getline(in, line)) throw InvalidData("truncated CSV payload");
        std::istringstream row(line);
        double re = 0, im = 0;
        row >> re >> comma >> im;
        if (!row) throw InvalidData("bad CSV value row");
        v = cdouble(re, im);
    }
    return f;
}

} // namespace speclab
