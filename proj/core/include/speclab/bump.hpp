#pragma once

#include <functional>
#include <vector>

#include "speclab/errors.hpp"

namespace speclab {

// Specification of a compactly supported smooth cutoff: zero outside [a, b],
// identically one on [a1, b1], C^K ramps in between. seminorm_caps[i] bounds
// |phi^(i)|; an empty vector means "unconstrained". A bounded family in the
// sense used by the uniformity experiments is: fixed support, fixed caps.
struct BumpSpec {
    double a = 0.5;
    double a1 = 1.0;
    double b1 = 2.0;
    double b = 4.0;
    int smoothness_order = 8;
    std::vector<double> seminorm_caps;
};

class Bump {
  public:
    Bump() = default;
    explicit Bump(const BumpSpec& spec);

    double operator()(double x) const;
    const BumpSpec& spec() const { return spec_; }

    // Max of |phi^(i)| sampled numerically, i = 0..smoothness_order.
    const std::vector<double>& achieved_seminorms() const { return seminorms_; }

  private:
    BumpSpec spec_;
    std::vector<double> seminorms_;
};

// Builds the standard exp(-1/x) transition bump for the spec; requires
// a < a1 <= b1 < b. Achieved seminorms are reported on construction.
Bump make_bump(const BumpSpec& spec);

// A deterministic family of `count` cutoffs inside the bounded set of `base`
// (same support, plateaus nested inside [a1, b1]).
std::vector<Bump> make_bump_family(const BumpSpec& base, int count);

} // namespace speclab
