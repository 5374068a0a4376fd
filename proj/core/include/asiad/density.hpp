#pragma once

#include "asiad/contour.hpp"
#include "asiad/quadrature.hpp"
#include "asiad/types.hpp"

namespace asiad {

/// Which form of the defining contour integral an evaluation uses: the
/// general three-segment contour, or one of the two closed real-integral
/// specializations (theta = pi/2 or theta = pi, both at radius 1).
enum class Variant { general, theta_half, theta_pi };

struct Prefactor {
    double c;     // the positive prefactor itself
    double log_c; // its logarithm, safe when c under/overflows
};

/// Elementary prefactor of both density representations. Throws
/// OverflowError when w^{-1/eps} leaves the range of exp (the log form in
/// log_c is always finite; density evaluation uses it internally).
Prefactor prefactor(const ModelParams& p);

/// Oscillatory kernel shared by the inner integrals:
///   K(t, a) = (2 pi i)^{-1} int e^{-xi^2/(2t)} sinh(xi) e^{a cosh(xi)} dxi
/// over a log-Hankel contour, a >= 0 (Re cosh < 0 past theta = pi/2 makes
/// the integrand decay). The two specializations evaluate the
/// equivalent single real integrals; the general variant integrates over c.
/// For a > 15 the radius-1 vertical segment of a general contour would have
/// to cancel like e^{2a}, so the theta-pi form is substituted there.
double hw_kernel(double t, double a, Variant v, const ContourSpec& c = {},
                 const QuadratureConfig& q = {}, double* abs_err = nullptr);

/// Inner function of the first representation's double integral:
///   psi(x) = (2 pi i)^{-1} int e^{-xi^2/(2t)} sinh(xi)
///            exp(2x cosh(xi)/sqrt(2 w^{1/eps})) dxi,
/// real for x > 0, vanishing faster than any power as x -> 0. p.nu unused.
double psi(double x, const ModelParams& p, const ContourSpec& c = {},
           const QuadratureConfig& q = {});

/// First representation: c_{nu,eps,t}(w) int_0^inf x^nu e^{-x^2} psi(x) dx.
/// The outer integral is split at x = 1 with x = e^{-s} substituted on the
/// lower part; below an automatically chosen x_min the integrand is dropped
/// (psi vanishes superpolynomially there). slow_convergence is flagged for
/// nu <= -1, where integrability rests on that vanishing alone.
EvalResult density_yor(const ModelParams& p, Variant v = Variant::theta_pi,
                       const ContourSpec& c = {},
                       const QuadratureConfig& q = {});

/// Second representation: Gamma(nu+1) c_{nu,eps,t}(w) F(nu) with F the
/// Hermite-kernel contour integral. Throws NegativeIntegerDegree when nu is
/// within delta_int = 1e-6 of a negative integer (Gamma pole; use the first
/// representation there).
EvalResult density_hermite(const ModelParams& p,
                           Variant v = Variant::theta_pi,
                           const ContourSpec& c = {},
                           const QuadratureConfig& q = {});

/// Entire bridge functions connecting the two representations:
///   P(mu) = int_0^inf x^mu e^{-x^2} psi(x) dx,   P(mu) = Gamma(mu+1) F(mu),
///   F(mu) = (2 pi i)^{-1} int e^{-xi^2/(2t)} sinh(xi)
///           H_{-(mu+1)}(-cosh(xi)/sqrt(2 w^{1/eps})) dxi.
/// Real for real mu up to quadrature noise. nu plays no role.
Complex p_function(Complex mu, double eps, double t, double w,
                   const ContourSpec& c = {}, const QuadratureConfig& q = {});
Complex f_function(Complex mu, double eps, double t, double w,
                   const ContourSpec& c = {}, const QuadratureConfig& q = {});

/// Conditional density of the eps-power at w given that the driving
/// Brownian motion ends at x; independent of nu. Evaluated through the
/// kernel K(t, e^x/w^{1/eps}); the contour c is honored while the kernel
/// argument stays small enough for a general contour (see hw_kernel).
double conditional_density(double x, const ModelParams& p,
                           const ContourSpec& c = {},
                           const QuadratureConfig& q = {});

/// Dispatch entry point: hermite-theta-pi unless nu sits within 1e-6 of a
/// negative integer, in which case yor-theta-pi takes over.
EvalResult density(const ModelParams& p, const QuadratureConfig& q = {});

/// Guard radius around negative integer nu for the dispatch rule.
inline constexpr double kNegIntegerGuard = 1e-6;

} // namespace asiad
