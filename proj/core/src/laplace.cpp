#include "asiad/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "asiad/density.hpp"
#include "asiad/errors.hpp"
#include "asiad/specialfn.hpp"

namespace asiad {
namespace {

constexpr double kPi = 3.14159265358979323846;

// large-t truncation must stay under this fraction of the result; the
// module certifies identities at the 1e-3 level, so a truncation at that
// size makes the check meaningless rather than merely loose
constexpr double kTailGuard = 1e-3;

struct TPoint {
    double value = 0.0;
    double err = 0.0;
};

double simpson_coef(int i, int n) {
    if (i == 0 || i == n - 1) return 1.0;
    return i % 2 == 1 ? 4.0 : 2.0;
}

// Composite Simpson of e^{-zt} f(t) over the geometric grid, in the
// variable g = ln t (so dt = t dg). The coarse pass reuses every other
// node; its disagreement with the fine pass is the quadrature error bound.
std::vector<TransformResult> transform_grid(
    std::span<const Complex> zs, const std::function<TPoint(double)>& f,
    const TransformGrid& grid) {
    grid.validate();
    double re_min = std::numeric_limits<double>::infinity();
    for (Complex z : zs) {
        if (!(z.real() > 0.0))
            throw BadParameter("transform: Re(z) must be positive");
        re_min = std::min(re_min, z.real());
    }
    double t_max = grid.t_max > 0.0 ? grid.t_max : 20.0 / re_min;
    if (!(t_max > grid.t_min))
        throw BadParameter("transform: t_max must exceed t_min");

    int n = grid.points;
    double g0 = std::log(grid.t_min);
    double h = (std::log(t_max) - g0) / (n - 1);
    std::vector<double> tv(n);
    std::vector<TPoint> fv(n);
    for (int i = 0; i < n; ++i) {
        tv[i] = std::exp(g0 + i * h);
        fv[i] = f(tv[i]);
    }

    // anchors for the exp(-kappa/t) continuation below t_min
    int i0 = -1, i1 = -1;
    for (int i = 0; i < n; ++i) {
        if (fv[i].value > 0.0) {
            if (i0 < 0) {
                i0 = i;
            } else {
                i1 = i;
                break;
            }
        }
    }

    std::vector<TransformResult> out(zs.size());
    for (size_t k = 0; k < zs.size(); ++k) {
        Complex z = zs[k];
        Complex fine{0.0, 0.0}, coarse{0.0, 0.0};
        double err_f = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex damp = std::exp(-z * tv[i]);
            Complex r = damp * (fv[i].value * tv[i]);
            fine += simpson_coef(i, n) * r;
            err_f += simpson_coef(i, n) * std::abs(damp) * fv[i].err * tv[i];
            if (i % 2 == 0)
                coarse += simpson_coef(i / 2, (n + 1) / 2) * r;
        }
        fine *= h / 3.0;
        coarse *= 2.0 * h / 3.0;
        err_f *= h / 3.0;

        Complex value = fine;
        double err = std::abs(fine - coarse) + err_f;

        // mass below t_min through the fitted superpolynomial vanishing;
        // the model is approximate, so the correction doubles as its own
        // error bar
        if (i0 >= 0 && i1 > i0) {
            double kappa = std::log(fv[i1].value / fv[i0].value) /
                           (1.0 / tv[i0] - 1.0 / tv[i1]);
            double t1 = grid.t_min;
            if (std::isfinite(kappa) && kappa > 0.0) {
                double reach = std::exp(kappa / tv[i0] - kappa / t1);
                Complex tail = std::exp(-z * t1) *
                               (fv[i0].value * reach * t1 * t1 / kappa);
                value += tail;
                err += std::abs(tail);
            } else {
                // not yet decaying at the grid edge: rectangle bound
                err += fv[i0].value * t1;
            }
        } else if (n > 0) {
            err += fv[0].err * grid.t_min;
        }

        // beyond t_max treat f as frozen at its last value
        Complex tail_hi = std::exp(-z * t_max) * (fv[n - 1].value / z.real());
        double mag_hi =
            std::abs(tail_hi) + fv[n - 1].err * std::exp(-z.real() * t_max) /
                                    z.real();
        if (mag_hi > kTailGuard * (std::abs(value) + mag_hi) &&
            mag_hi > 1e-300)
            throw TailNotNegligible(
                "transform: raise t_max, the cut tail is not below the "
                "certification level");
        value += tail_hi;
        err += mag_hi;

        out[k] = {value, err};
    }
    return out;
}

// Density of (A_t)^eps at w as a function of t, routed so each t lands on
// the representation that is healthy there: below t = 0.4 the theta-pi
// forms cancel past double precision and the theta-half forms take over.
std::function<TPoint(double)> density_in_t(double nu, double eps, double w,
                                           const QuadratureConfig& q) {
    bool integer_pole = std::abs(nu - std::round(nu)) <= kNegIntegerGuard &&
                        std::round(nu) <= -1.0;
    return [=](double t) {
        ModelParams p{nu, eps, t, w};
        Variant v = t < 0.4 ? Variant::theta_half : Variant::theta_pi;
        EvalResult r = integer_pole ? density_yor(p, v, {}, q)
                                    : density_hermite(p, v, {}, q);
        return TPoint{r.value, r.abs_error};
    };
}

} // namespace

Complex laplace_rhs(Complex z, double nu, double eps, double w,
                    const QuadratureConfig& q) {
    if (nu < 0.0)
        throw DomainError("laplace_rhs: the transform identity needs nu >= 0");
    if (!(w > 0.0) || eps == 0.0)
        throw BadParameter("laplace_rhs: need w > 0 and eps != 0");
    Complex rho = std::sqrt(2.0 * z + nu * nu);
    if (!(rho.real() > 0.0))
        throw DomainError("laplace_rhs: Re sqrt(2z + nu^2) must be positive");

    double le = std::log(2.0) + std::log(w) / eps; // ln(2 w^{1/eps})
    double sw = std::exp(-0.5 * le);
    double log_pref =
        0.5 * nu * le - std::log(std::abs(eps)) - std::log(w) - sw * sw;

    // x = s^2 removes the x^{nu-1} endpoint singularity; the envelope
    // e^{-x^2 + 2 x sw} of the Bessel factor fixes the cutoff
    double x_up = sw + std::sqrt(sw * sw + std::log(1e18));
    double s_up = std::sqrt(x_up);
    auto g = [&](double s) -> Complex {
        double y = 2.0 * s * s * sw;
        return 2.0 * bessel_i_series(rho, y) *
               std::pow(s, 2.0 * nu - 1.0) * std::exp(-s * s * s * s);
    };
    Complex total{0.0, 0.0};
    double split = std::min(1.0, s_up);
    total += integrate_tanh_sinh(std::function<Complex(double)>(g), 0.0,
                                 split, q)
                 .value;
    if (s_up > split)
        total += integrate(std::function<Complex(double)>(g), split, s_up, q)
                     .value;
    return std::exp(log_pref) * total;
}

TransformResult laplace_numeric(Complex z, double nu, double eps, double w,
                                const TransformGrid& grid,
                                const QuadratureConfig& q) {
    std::vector<TransformResult> r =
        transform_grid({&z, 1}, density_in_t(nu, eps, w, q), grid);
    return r[0];
}

std::vector<TransformResult> laplace_numeric(std::span<const Complex> zs,
                                             double nu, double eps, double w,
                                             const TransformGrid& grid,
                                             const QuadratureConfig& q) {
    return transform_grid(zs, density_in_t(nu, eps, w, q), grid);
}

double bessel_ilt_rhs(double t, double mu, double eta, const ContourSpec& c,
                      const QuadratureConfig& q, double* abs_err) {
    if (!(eta > 0.0))
        throw BadParameter("bessel_ilt_rhs: need eta > 0");
    double kerr = 0.0;
    double kv = hw_kernel(t, eta, Variant::general, c, q, &kerr);
    double fac = eta * std::exp(-0.5 * mu * mu * t) / std::sqrt(2.0 * kPi * t);
    if (abs_err) *abs_err = fac * kerr;
    return fac * kv;
}

BesselIltReport verify_bessel_ilt(double z, double mu, double eta,
                                  const ContourSpec& c,
                                  const QuadratureConfig& q,
                                  const TransformGrid& grid) {
    if (!(z > 0.0))
        throw BadParameter("verify_bessel_ilt: need z > 0");
    auto f = [&](double t) {
        TPoint p;
        p.value = bessel_ilt_rhs(t, mu, eta, c, q, &p.err);
        return p;
    };
    Complex zc{z, 0.0};
    TransformResult num = transform_grid({&zc, 1}, f, grid)[0];
    Complex rho = std::sqrt(Complex(2.0 * z + mu * mu, 0.0));
    Complex series = bessel_i_series(rho, eta);
    BesselIltReport rep;
    rep.z = z;
    rep.mu = mu;
    rep.eta = eta;
    rep.numeric = num.value;
    rep.abs_error = num.abs_error;
    rep.series = series;
    rep.rel_dev = std::abs(num.value - series) / std::abs(series);
    return rep;
}

} // namespace asiad
