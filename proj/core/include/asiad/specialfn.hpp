#pragma once

#include "asiad/contour.hpp"
#include "asiad/quadrature.hpp"
#include "asiad/types.hpp"

namespace asiad {

/// Gamma function for complex arguments, relative error <= 1e-13 for
/// |z| <= 50 away from poles. Reflection formula for Re(z) < 0.5. Throws
/// PoleError within delta_pole = 1e-12 of a non-positive integer.
Complex gamma_complex(Complex z);

/// Kummer confluent hypergeometric Phi(a,b,z) by ascending series with
/// compensated summation; the transformation Phi(a,b,z) = e^z Phi(b-a,b,-z)
/// is applied for Re(z) < 0 to avoid alternating-series cancellation.
/// Throws BadParameter when b sits at a non-positive integer, NoConvergence
/// past the 10000-term cap.
Complex kummer_phi(Complex a, Complex b, Complex z);

enum class HermiteRegime { series, negative_degree_integral, asymptotic };

constexpr const char* hermite_regime_name(HermiteRegime r) {
    switch (r) {
        case HermiteRegime::series: return "series";
        case HermiteRegime::negative_degree_integral:
            return "negative-degree-integral";
        default: return "asymptotic";
    }
}

/// Evaluation-strategy thresholds for the Hermite function. The series is
/// summed in double-double because the two Kummer terms cancel like
/// exp(Re z^2); beyond series_z_max the asymptotic expansion takes over
/// inside its sector |arg z| < 3pi/4, and the negative-degree integral
/// covers the left sector (with a degree shift and the forward recurrence
/// when Re(mu) >= 0).
struct HermiteConfig {
    double series_z_max = 6.0;
    double sector_margin = 0.1;   // keep |arg z| < 3pi/4 - margin for asymptotics
    double int_degree_tol = 1e-9; // snap to Hermite polynomials within this
    int max_asym_terms = 80;
    QuadratureConfig quad{};      // for the integral regime
};

struct HermiteValue {
    Complex value;
    HermiteRegime regime;
};

/// Hermite function of complex degree mu, entire in both arguments.
HermiteValue hermite_h_info(Complex mu, Complex z,
                            const HermiteConfig& cfg = {});
Complex hermite_h(Complex mu, Complex z, const HermiteConfig& cfg = {});

/// Integral representation valid for Re(mu) < 0:
///   H_mu(z) = Gamma(-mu)^{-1} int_0^inf e^{-u^2-2zu} u^{-(mu+1)} du.
/// Throws DomainError for Re(mu) >= 0, OverflowError when the integrand
/// peak exp((Re z)^2) leaves double range.
Complex hermite_h_negdeg(Complex mu, Complex z,
                         const QuadratureConfig& q = {});

/// n-term asymptotic sum (2z)^mu sum_{k<n} (-mu)_{2k}/k! (-1)^k (2z)^{-2k},
/// valid in |arg z| < 3pi/4 (DomainError outside). If err is non-null it
/// receives the magnitude of the first omitted term as the error estimate.
Complex hermite_asymptotic(Complex mu, Complex z, int n,
                           double* err = nullptr);

/// Modified Bessel function I_rho(eta) by the ascending power series,
/// relative error <= 1e-12 for |eta| <= 60. BadParameter when rho is a
/// negative integer (series normalization undefined).
Complex bessel_i_series(Complex rho, Complex eta);

/// I_rho(eta) as the Hankel-type contour integral
///   (2 pi i)^{-1} int e^{-rho xi + eta cosh xi} d xi
/// over the given log-Hankel contour. Requires Re(eta) > 0 for ray decay.
Complex bessel_i_contour(Complex rho, Complex eta, const ContourSpec& c,
                         const QuadratureConfig& q = {});

} // namespace asiad
