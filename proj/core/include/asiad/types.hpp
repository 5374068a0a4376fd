#pragma once

#include <cmath>
#include <complex>
#include <string_view>

#include "asiad/errors.hpp"

namespace asiad {

using Complex = std::complex<double>;

/// Parameters of one density evaluation: the law of (A_t)^eps where
/// A_t = int_0^t exp(2(nu s + B_s)) ds, evaluated at the point w.
struct ModelParams {
    double nu  = 0.0; ///< drift parameter, any real
    double eps = 1.0; ///< power exponent, nonzero (eps = -1 is the reciprocal law)
    double t   = 1.0; ///< time horizon, positive
    double w   = 1.0; ///< evaluation point, positive

    void validate() const {
        if (!(eps != 0.0) || !std::isfinite(eps))
            throw BadParameter("ModelParams: eps must be nonzero and finite");
        if (!(t > 0.0) || !std::isfinite(t))
            throw BadParameter("ModelParams: t must be positive and finite");
        if (!(w > 0.0) || !std::isfinite(w))
            throw BadParameter("ModelParams: w must be positive and finite");
        if (!std::isfinite(nu))
            throw BadParameter("ModelParams: nu must be finite");
    }
};

/// Evaluation route through one of the two integral representations,
/// either on the general contour or on a closed real-integral special case.
enum class Route {
    yor_general,
    yor_theta_half,
    yor_theta_pi,
    hermite_general,
    hermite_theta_half,
    hermite_theta_pi,
};

constexpr std::string_view route_name(Route r) {
    switch (r) {
        case Route::yor_general:        return "yor-general";
        case Route::yor_theta_half:     return "yor-theta-half";
        case Route::yor_theta_pi:       return "yor-theta-pi";
        case Route::hermite_general:    return "hermite-general";
        case Route::hermite_theta_half: return "hermite-theta-half";
        case Route::hermite_theta_pi:   return "hermite-theta-pi";
    }
    return "unknown";
}

/// Result of a density evaluation.
struct EvalResult {
    double value     = 0.0; ///< density value (>= -abs_error)
    double abs_error = 0.0; ///< absolute error estimate, quadrature + roundoff
    Route  route     = Route::hermite_theta_pi;
    /// Set when the outer integral converges only through the
    /// superpolynomial vanishing of the kernel at 0 (nu <= -1 on the
    /// direct route); the value is still usable, convergence is just slow.
    bool slow_convergence = false;
};

/// Tolerances and budgets for the 1-D and contour quadrature schemes.
struct QuadratureConfig {
    double rel_tol     = 1e-10; ///< target relative tolerance
    double abs_tol     = 0.0;   ///< absolute tolerance floor (0 = pure relative)
    double tail_factor = 0.01;  ///< truncation tail tolerance = tail_factor * rel_tol
    int    max_panels  = 2500;   ///< subdivision budget per 1-D integral
    int    initial_panels = 8;  ///< seed panels before refinement
    /// multiplier on eps * L1-norm added to every error estimate so that
    /// cancellation-dominated integrals report honest uncertainty
    double roundoff_guard = 50.0;

    void validate() const {
        if (!(rel_tol > 0) || !(tail_factor > 0) || max_panels < 1 || initial_panels < 1)
            throw BadParameter("QuadratureConfig: tolerances and budgets must be positive");
    }
};

} // namespace asiad
