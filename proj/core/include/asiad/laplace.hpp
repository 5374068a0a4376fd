#pragma once

#include <span>
#include <vector>

#include "asiad/contour.hpp"
#include "asiad/quadrature.hpp"
#include "asiad/types.hpp"

namespace asiad {

/// One sample of a transform: the location z in the right half-plane and
/// the transform value there.
struct LaplacePoint {
    Complex z{0.0, 0.0};
    Complex value{0.0, 0.0};
};

/// Geometric t-grid for the numerical transforms. t_max == 0 resolves to
/// 20 / Re(z), far enough out that e^{-zt} has died for the z this module
/// accepts. points must be 1 mod 4 so both the Simpson grid and its
/// half-resolution comparison grid have even interval counts.
///
/// t_min stops where double precision stops: below t ~ 0.05 the density
/// integrands cancel past the last digit and return noise. The mass below
/// t_min is recovered through the exp(-kappa/t) vanishing of the density,
/// with kappa fitted from the two smallest usable grid points, and the
/// whole correction is mirrored into the error bound.
struct TransformGrid {
    double t_min = 0.05;
    double t_max = 0.0;
    int points = 161;

    void validate() const {
        if (!(t_min > 0.0) || points < 5 || points % 4 != 1)
            throw BadParameter(
                "TransformGrid: need t_min > 0 and points = 4k+1 >= 5");
        if (t_max != 0.0 && !(t_max > t_min))
            throw BadParameter("TransformGrid: t_max must exceed t_min");
    }
};

struct TransformResult {
    Complex value{0.0, 0.0};
    double abs_error = 0.0;
};

/// Closed-form side of the density transform:
///   ((2 w^{1/eps})^{nu/2} / (|eps| w)) e^{-1/(2 w^{1/eps})}
///     int_0^inf I_rho(2 x / sqrt(2 w^{1/eps})) x^{nu-1} e^{-x^2} dx
/// with rho = sqrt(2z + nu^2), principal branch. The identity holds for
/// nu >= 0 only; DomainError otherwise. Real for real z.
Complex laplace_rhs(Complex z, double nu, double eps, double w,
                    const QuadratureConfig& q = {});

/// Transform of the density itself, int_0^inf e^{-zt} alpha_t(w) dt, by
/// composite Simpson on the geometric t-grid plus tail corrections at both
/// ends. Re(z) must be positive; in practice Re(z) >= 3 keeps the large-t
/// truncation negligible. Throws TailNotNegligible when it is not.
TransformResult laplace_numeric(Complex z, double nu, double eps, double w,
                                const TransformGrid& grid = {},
                                const QuadratureConfig& q = {});

/// Batch form sharing one set of density evaluations across all z. The
/// grid's automatic t_max resolves against the smallest Re(z).
std::vector<TransformResult> laplace_numeric(std::span<const Complex> zs,
                                             double nu, double eps, double w,
                                             const TransformGrid& grid = {},
                                             const QuadratureConfig& q = {});

/// The t-function whose transform is a modified Bessel function:
///   eta e^{-mu^2 t / 2} (2 pi t)^{-1/2} K(t, eta),
/// K the kernel contour integral taken over c. Entire in the contour
/// parameters: any admissible c gives the same value.
double bessel_ilt_rhs(double t, double mu, double eta,
                      const ContourSpec& c = {},
                      const QuadratureConfig& q = {},
                      double* abs_err = nullptr);

struct BesselIltReport {
    double z = 0.0;
    double mu = 0.0;
    double eta = 0.0;
    Complex numeric{0.0, 0.0}; ///< transform of bessel_ilt_rhs
    double abs_error = 0.0;
    Complex series{0.0, 0.0}; ///< I_{sqrt(2z + mu^2)}(eta) by series
    double rel_dev = 0.0;     ///< |numeric - series| / |series|
};

/// Transforms t -> bessel_ilt_rhs(t, mu, eta) numerically at z and compares
/// with the Bessel series the transform must reproduce.
BesselIltReport verify_bessel_ilt(double z, double mu, double eta,
                                  const ContourSpec& c = {},
                                  const QuadratureConfig& q = {},
                                  const TransformGrid& grid = {});

} // namespace asiad
