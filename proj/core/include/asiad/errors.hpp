#pragma once

#include <stdexcept>
#include <string>

namespace asiad {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument violates a documented precondition (invalid parameter set,
/// non-positive time, zero power exponent, malformed grid, ...).
struct BadParameter : Error {
    using Error::Error;
};

/// Evaluation requested at or too close to a pole of the function.
struct PoleError : Error {
    using Error::Error;
};

/// Argument outside the region where the chosen representation is valid.
struct DomainError : Error {
    using Error::Error;
};

/// Series or adaptive scheme exhausted its iteration/subdivision budget
/// before reaching the requested tolerance.
struct NoConvergence : Error {
    using Error::Error;
};

/// Contour description violates its invariants (angle, radius, truncation).
struct InvalidContour : Error {
    using Error::Error;
};

/// Integrand magnitude at the ray cutoff exceeds the tail tolerance; a
/// larger truncation is required.
struct TailNotNegligible : Error {
    using Error::Error;
};

/// Intermediate or final quantity leaves the representable range of double.
struct OverflowError : Error {
    using Error::Error;
};

/// Hermite-route density requested at a degree too close to a negative
/// integer pole of Gamma(nu+1).
struct NegativeIntegerDegree : Error {
    using Error::Error;
};

/// Numerically integrated CDF fails to reach 1 within tolerance.
struct CdfNotNormalized : Error {
    using Error::Error;
};

} // namespace asiad
