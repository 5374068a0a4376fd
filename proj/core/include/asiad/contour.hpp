#pragma once

#include <array>
#include <functional>

#include "asiad/quadrature.hpp"
#include "asiad/types.hpp"

namespace asiad {

/// Logarithmic Hankel contour: two horizontal rays at imaginary parts
/// -theta and +theta joined by a vertical segment at real part ln(radius).
/// truncation is the cutoff T in the ray parameter, so the path runs
///   (T - i theta)  ->  (ln R - i theta)  ->  (ln R + i theta)  ->  (T + i theta).
struct ContourSpec {
    double theta = 3.14159265358979323846;
    double radius = 1.0;
    double truncation = 8.0;
    int nodes = 8; // initial quadrature subdivisions per segment

    /// Throws InvalidContour unless pi/2 <= theta <= pi, radius >= 1,
    /// truncation > ln(radius), nodes >= 1.
    void validate() const;
};

/// One straight piece of the contour, traversed start -> end.
struct ContourSegment {
    Complex start;
    Complex end;
};

/// The three oriented segments: lower ray (inbound), vertical joiner,
/// upper ray (outbound).
std::array<ContourSegment, 3> parameterize(const ContourSpec& c);

enum class Orientation { forward, reversed };

struct ContourIntegral {
    Complex value{0.0, 0.0};     // (2 pi i)^-1 times the path integral
    double abs_error_estimate = 0.0;
    std::array<Complex, 3> segments{}; // contributions, same normalization
    bool oscillatory = false;    // theta at or near pi/2: slowly decaying rays
    double l1 = 0.0;             // path integral of |f| / (2 pi)
    int evals = 0;
};

/// (2 pi i)^-1 integral of f over the contour. The integrand must be finite
/// on the path and negligible at the ray cutoffs: if |f| at either cutoff
/// exceeds the tail tolerance implied by q, TailNotNegligible is thrown.
/// Reversed orientation negates the value exactly.
ContourIntegral integrate(const std::function<Complex(Complex)>& f,
                          const ContourSpec& c, const QuadratureConfig& q = {},
                          Orientation o = Orientation::forward);

/// Smallest ray cutoff T such that the Gaussian ray factor for time t,
/// majorized as exp(-(T^2 - theta^2)/(2t)) * exp(coupling * T), falls below
/// tol. coupling bounds the exponential growth rate of the remaining factors
/// on the ray (sinh, Hermite or Bessel terms). Closed-form root of the
/// scalar inequality; always at least ln(radius) + 1.
double auto_truncation(double t, double coupling, const ContourSpec& c,
                       double tol);

} // namespace asiad
