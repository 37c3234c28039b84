#pragma once

#include <stdexcept>
#include <string>

namespace speclab {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad call-site input: wrong exponent order, non-power-of-two sizes, ...
struct InvalidArgument : Error {
    using Error::Error;
};

// A request would materialize more data than the configured cap allows.
struct CapacityError : Error {
    using Error::Error;
};

// Dyadic scale outside the representable window of a grid.
struct ScaleOutOfRange : Error {
    using Error::Error;
};

// Non-finite values where finite data is required.
struct InvalidData : Error {
    using Error::Error;
};

// Operator violates a structural requirement (self-adjointness, spectrum sign).
struct InvalidOperator : Error {
    using Error::Error;
};

// An iterative numerical procedure failed to converge; message carries the
// last error estimate.
struct NumericalFailure : Error {
    using Error::Error;
};

// Evolution time would push significant kernel mass past the wrap-safe
// region of the torus.
struct UnsafeTime : Error {
    using Error::Error;
};

// Not enough data span to fit an exponent.
struct InsufficientSpan : Error {
    using Error::Error;
};

// Kernel samples do not cover enough decades for a decay fit.
struct InsufficientDecay : Error {
    using Error::Error;
};

// Requested an exact block norm for a (p,q) pair without a closed form.
struct UnsupportedNormPair : Error {
    using Error::Error;
};

} // namespace speclab
