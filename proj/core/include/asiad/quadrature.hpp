#pragma once

#include <functional>

#include "asiad/types.hpp"

namespace asiad {

/// Outcome of one quadrature call. l1 holds the integral of |f|; a value many
/// orders below l1 signals heavy cancellation, and abs_error already accounts
/// for the roundoff that cancellation implies (it never drops below eps*l1).
struct IntegralResult {
    double value = 0.0;
    double abs_error = 0.0;
    double l1 = 0.0;
    int evals = 0;
};

struct ComplexIntegralResult {
    Complex value{0.0, 0.0};
    double abs_error = 0.0;
    double l1 = 0.0;
    int evals = 0;
};

/// Adaptive Gauss-Kronrod 7/15 on a finite interval, worst-panel-first
/// bisection. Throws NoConvergence when cfg.max_panels is exhausted before
/// the error target (or the roundoff floor) is met. Integrand must be finite
/// on [a,b].
IntegralResult integrate(const std::function<double(double)>& f, double a,
                         double b, const QuadratureConfig& cfg = {});

ComplexIntegralResult integrate(const std::function<Complex(double)>& f,
                                double a, double b,
                                const QuadratureConfig& cfg = {});

/// Tanh-sinh (double-exponential) rule on a finite interval. Tolerates
/// integrable singularities at either endpoint; the integrand is never
/// evaluated exactly at a or b.
IntegralResult integrate_tanh_sinh(const std::function<double(double)>& f,
                                   double a, double b,
                                   const QuadratureConfig& cfg = {});

ComplexIntegralResult integrate_tanh_sinh(
    const std::function<Complex(double)>& f, double a, double b,
    const QuadratureConfig& cfg = {});

} // namespace asiad
