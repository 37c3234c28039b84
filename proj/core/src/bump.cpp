#include "speclab/bump.hpp"

#include <algorithm>
#include <cmath>

namespace speclab {

namespace {

double mollifier(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

// Smooth 0 -> 1 transition on [0, 1].
double ramp(double s) {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    double up = mollifier(s);
    return up / (up + mollifier(1.0 - s));
}

std::vector<double> sample_seminorms(const std::function<double(double)>& phi, double a,
                                     double b, int order) {
    // Central differences on a fine uniform sample. Good to a few percent at
    // order 8, which is all the reporting needs.
    const int m = 6000;
    const double pad = 0.05 * (b - a);
    const double lo = a - pad, hi = b + pad;
    const double dx = (hi - lo) / m;
    std::vector<double> cur(static_cast<std::size_t>(m + 1));
    for (int i = 0; i <= m; ++i) cur[static_cast<std::size_t>(i)] = phi(lo + i * dx);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(order + 1));
    for (int k = 0; k <= order; ++k) {
        double mx = 0.0;
        for (double v : cur) mx = std::max(mx, std::abs(v));
        out.push_back(mx);
        if (k == order) break;
        std::vector<double> next(cur.size());
        for (std::size_t i = 1; i + 1 < cur.size(); ++i)
            next[i] = (cur[i + 1] - cur[i - 1]) / (2.0 * dx);
        next.front() = next[1];
        next.back() = next[next.size() - 2];
        cur = std::move(next);
    }
    return out;
}

} // namespace

Bump::Bump(const BumpSpec& spec) : spec_(spec) {
    if (!(spec.a < spec.a1 && spec.a1 <= spec.b1 && spec.b1 < spec.b))
        throw InvalidArgument("bump requires a < a1 <= b1 < b");
    auto f = [this](double x) { return (*this)(x); };
    seminorms_ = sample_seminorms(f, spec.a, spec.b, spec.smoothness_order);
}

double Bump::operator()(double x) const {
    if (x <= spec_.a || x >= spec_.b) return 0.0;
    if (x < spec_.a1) return ramp((x - spec_.a) / (spec_.a1 - spec_.a));
    if (x <= spec_.b1) return 1.0;
    return ramp((spec_.b - x) / (spec_.b - spec_.b1));
}

Bump make_bump(const BumpSpec& spec) { return Bump(spec); }

std::vector<Bump> make_bump_family(const BumpSpec& base, int count) {
    std::vector<Bump> family;
    family.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        // Plateau shrinks inward while support stays fixed, so every member
        // lives in the same bounded set.
        double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        BumpSpec s = base;
        double width = base.b1 - base.a1;
        s.a1 = base.a1 + 0.2 * t * width;
        s.b1 = base.b1 - 0.2 * t * width;
        family.emplace_back(s);
    }
    return family;
}

} // namespace speclab
