#include "asiad/density.hpp"

#include "asiad/errors.hpp"
#include "asiad/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

namespace asiad {

namespace {

constexpr double kPi = 3.14159265358979323846;

// pin the overload so lambdas do not sit ambiguous between the two
IntegralResult integrate_r(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& q) {
    return integrate(f, a, b, q);
}

ComplexIntegralResult integrate_c(const std::function<Complex(double)>& f,
                                  double a, double b,
                                  const QuadratureConfig& q) {
    return integrate(f, a, b, q);
}

// sign and log-magnitude of Gamma(x) for real non-pole x
struct SignedLogGamma {
    double log_abs;
    double sign;
};

SignedLogGamma log_gamma_signed(double x) {
    if (x > 0.0) return {std::lgamma(x), 1.0};
    // Gamma alternates sign across the negative integers:
    // negative on (-1,0), positive on (-2,-1), ...
    long long k = static_cast<long long>(std::floor(-x));
    return {std::lgamma(x), (k % 2 == 0) ? -1.0 : 1.0};
}

// 1/sqrt(2 w^{1/eps}), the argument scale of both inner kernels
double kernel_scale(double eps, double w) {
    return std::exp(-0.5 * (std::log(2.0) + std::log(w) / eps));
}

// log of the elementary prefactor; may be -inf when w^{-1/eps} overflows,
// which is the regime where the density itself underflows to zero
double log_prefactor(const ModelParams& p) {
    double lw = std::log(p.w);
    double e_arg = -lw / p.eps; // ln w^{-1/eps}
    double wie_inv =
        e_arg > 709.0 ? std::numeric_limits<double>::infinity() : std::exp(e_arg);
    return -std::log(std::abs(p.eps)) + 0.5 * p.nu * std::log(2.0) -
           0.5 * std::log(kPi * p.t) - 0.5 * (p.nu * p.nu * p.t + wie_inv) +
           ((p.nu - 1.0) / (2.0 * p.eps) - 1.0) * lw;
}

// an integral together with the log of the factor pulled out of it
struct Raw {
    double value = 0.0;
    double err = 0.0;
    double log_scale = 0.0;
};

// cutoff T with e^{-T^2/(2t) + coupling T} <= tol
double real_cutoff(double t, double coupling, double log_inv_tol) {
    double ct = coupling * t;
    return ct + std::sqrt(ct * ct + 2.0 * t * log_inv_tol);
}

double tail_log_inv_tol(const QuadratureConfig& q) {
    double tol = std::max(q.tail_factor * q.rel_tol, 1e-200);
    return -std::log(tol);
}

// The raw kernel integrals cancel down to exponentially small fractions of
// their L1 mass. Once the result is below ~1e3 eps * L1 the digits left are
// accumulated roundoff, and the sign of that noise is systematic across
// nearby parameters, so it does not average out under an outer integral.
// The true value decays faster than any power of the coupling there, so
// zero it and keep the clip level in the error channel.
constexpr double kNoiseClip = 1000.0;

void clip_noise(double l1, double& value, double& err) {
    double clip = kNoiseClip * std::numeric_limits<double>::epsilon() * l1;
    if (std::abs(value) <= clip) {
        value = 0.0;
        err = std::max(err, clip);
    }
}

// theta = pi specialization of the kernel contour integral:
//   e^{log_scale} * int_0^T e^{-u^2/(2t)} sinh(u) sin(pi u/t) g(u) du,
// log_scale = pi^2/(2t) - ln pi. g must not grow faster than e^{coupling-1}u.
Raw ray_pi(double t, double coupling, const std::function<double(double)>& g,
           const QuadratureConfig& q) {
    // the cutoff is sized against the integrand mass, but the integral can
    // cancel many orders below that mass, where a mass-relative tail becomes
    // a systematic bias invisible to the panel estimates; push the cutoff
    // well past the tolerance target and charge the leftover bound to err
    double T = real_cutoff(t, coupling, tail_log_inv_tol(q) + 25.0);
    double inv2t = 1.0 / (2.0 * t);
    auto f = [&](double u) {
        return std::exp(-u * u * inv2t) * std::sinh(u) * std::sin(kPi * u / t) *
               g(u);
    };
    IntegralResult r = integrate_r(f, 0.0, T, q);
    double tail = std::exp(-T * T * inv2t) * std::sinh(T) * std::abs(g(T)) /
                  (T / t - coupling);
    clip_noise(r.l1, r.value, r.abs_error);
    return {r.value, r.abs_error + tail, kPi * kPi * inv2t - std::log(kPi)};
}

// theta = pi/2 specialization:
//   e^{log_scale} * int_0^T e^{-u^2/(2t)} cosh(u) Re[e^{-i pi u/(2t)} g(u)] du,
// log_scale = pi^2/(8t) - ln pi.
Raw ray_half(double t, double coupling, const std::function<Complex(double)>& g,
             const QuadratureConfig& q) {
    // same deep cutoff and explicit tail charge as the theta = pi ray
    double T = real_cutoff(t, coupling, tail_log_inv_tol(q) + 25.0);
    double inv2t = 1.0 / (2.0 * t);
    auto f = [&](double u) {
        double phase = -kPi * u * inv2t;
        Complex ph(std::cos(phase), std::sin(phase));
        return std::exp(-u * u * inv2t) * std::cosh(u) * (ph * g(u)).real();
    };
    IntegralResult r = integrate_r(f, 0.0, T, q);
    double tail = std::exp(-T * T * inv2t) * std::cosh(T) * std::abs(g(T)) /
                  (T / t - coupling);
    clip_noise(r.l1, r.value, r.abs_error);
    return {r.value, r.abs_error + tail, kPi * kPi * inv2t / 4.0 - std::log(kPi)};
}

// The theta = pi/2 form with g(u) = e^{i a sinh(u)} oscillates with phase
// a sinh(u), far too fast for direct quadrature past moderate u. The
// integrand is entire, so the tail beyond u* (chosen so the direct part
// sees a bounded number of oscillations) is pushed through a Cauchy
// rectangle of height pi/2: one vertical connector plus one horizontal leg
// on which e^{i a sinh} has turned into the decaying e^{-a cosh}.
Raw yor_half_raw(double t, double a, const QuadratureConfig& q) {
    double T = real_cutoff(t, 1.0, tail_log_inv_tol(q));
    double inv2t = 1.0 / (2.0 * t);
    double u_star = T;
    // the rotated tail carries an e^{3 pi^2/(8t)} factor; below the t where
    // that overflows, T is small enough to take the oscillations head-on
    if (a * std::sinh(T) > 250.0 && 3.0 * kPi * kPi / (8.0 * t) < 700.0)
        u_star = std::asinh(250.0 / a);
    auto direct = [&](double u) {
        return std::exp(-u * u * inv2t) * std::cosh(u) *
               std::cos(a * std::sinh(u) - kPi * u * inv2t);
    };
    IntegralResult rd = integrate_r(direct, 0.0, u_star, q);
    double value = rd.value;
    double err = rd.abs_error;
    double l1 = rd.l1;
    if (u_star < T) {
        auto h = [&](Complex u) {
            Complex i(0.0, 1.0);
            return std::cosh(u) *
                   std::exp(-u * u * inv2t +
                            i * (a * std::sinh(u) - kPi * u * inv2t));
        };
        auto vert = [&](double v) -> Complex {
            return Complex(0.0, 1.0) * h(Complex(u_star, v));
        };
        ComplexIntegralResult rv = integrate_c(vert, 0.0, kPi / 2.0, q);
        // on Im(u) = pi/2 the integrand reduces to the real expression
        // e^{3 pi^2/(8t)} sinh(s) e^{-s^2/(2t) - a cosh(s)} sin(pi s/t)
        double boost = std::exp(3.0 * kPi * kPi / (8.0 * t));
        auto horiz = [&](double s) {
            return std::sinh(s) * std::exp(-s * s * inv2t - a * std::cosh(s)) *
                   std::sin(kPi * s / t);
        };
        IntegralResult rh = integrate_r(horiz, u_star, T, q);
        value += rv.value.real() + boost * rh.value;
        err += rv.abs_error + boost * rh.abs_error;
        l1 += rv.l1 + boost * rh.l1;
    }
    clip_noise(l1, value, err);
    return {value, err, kPi * kPi * inv2t / 4.0 - std::log(kPi)};
}

// full contour integral (2 pi i)^{-1} int e^{-xi^2/(2t)} sinh(xi) g(xi) dxi,
// with the ray cutoff widened automatically to meet the tail tolerance
struct RawC {
    Complex value;
    double err = 0.0;
};

RawC ray_general(double t, double coupling, const ContourSpec& c,
                 const std::function<Complex(Complex)>& g,
                 const QuadratureConfig& q) {
    ContourSpec cs = c;
    cs.validate();
    double tol = std::max(q.tail_factor * q.rel_tol, 1e-200);
    cs.truncation = std::max(c.truncation, auto_truncation(t, coupling, c, tol));
    double inv2t = 1.0 / (2.0 * t);
    auto f = [&](Complex xi) {
        return std::exp(-xi * xi * inv2t) * std::sinh(xi) * g(xi);
    };
    ContourIntegral r = integrate(f, cs, q);
    double clip = kNoiseClip * std::numeric_limits<double>::epsilon() * r.l1;
    double err = r.abs_error_estimate;
    if (std::abs(r.value) <= clip) {
        r.value = 0.0;
        err = std::max(err, clip);
    }
    return {r.value, err};
}

double log_sinh(double x) {
    return x > 20.0 ? x - std::log(2.0) : std::log(std::sinh(x));
}

// Real positive stationary point of -xi^2/(2t) + a cosh(xi); one exists for
// 0 < a t < 1, and iterating xi = asinh(xi / (a t)) walks straight to it.
// log_value estimates the log of the kernel value through the saddle height
// plus the sinh amplitude there; arm_gap is how far above that the contour
// arms at Im = pi would sit.
struct Saddle {
    double xi = 0.0;
    double log_value = 0.0;
    double arm_gap = 0.0;
    bool usable = false;
};

Saddle kernel_saddle(double t, double a) {
    Saddle s;
    double at = a * t;
    if (!(at > 0.0) || at >= 1.0 - 1e-12) return s;
    // g(x) = at sinh(x) - x is convex for x > 0 and its positive root is the
    // stationary point; Newton from a seed right of the root with g > 0
    // descends monotonically, and stays fast even as at -> 1 where the root
    // collapses into the origin
    double x = std::asinh(1.0 / at) + 0.5;
    while (at * std::sinh(x) - x <= 0.0) {
        x += 1.0;
        if (x > 701.0) return s; // cosh overflows; the kernel is a hard zero
    }
    for (int i = 0; i < 100; ++i) {
        double g = at * std::sinh(x) - x;
        double dg = at * std::cosh(x) - 1.0;
        double nx = x - g / dg;
        bool done = x - nx <= 1e-14 * (1.0 + x);
        x = nx;
        if (done) break;
    }
    double ac = a * std::cosh(x);
    s.xi = x;
    s.log_value = ac - x * x / (2.0 * t) + log_sinh(x);
    s.arm_gap = kPi * kPi / (2.0 * t) - 2.0 * ac;
    s.usable = true;
    return s;
}

// The arm forms integrate e^{pi^2/(2t)}-scale oscillation down to a value of
// size e^{log_value}, so their relative noise floor is ~eps times the gap.
// Past ~e^18 the digits they can deliver no longer meet any stated tolerance
// and the contour is redrawn through the stationary point instead. Moving
// the vertical segment to xi* cuts away the cancelling head of the arm form
// (amplitude e^{pi^2/(2t)} versus e^{pi^2/(2t) - 2 a cosh xi*} past the
// saddle), so it wins whenever the stationary point sits meaningfully off
// zero; an arm_gap beyond e^600 would overflow the rescaled arm integrand,
// and nothing that deep carries value anyway.
constexpr double kSaddleTrigger = 18.0;

bool saddle_wanted(double t, const Saddle& s) {
    return s.usable && kPi * kPi / (2.0 * t) - s.log_value > kSaddleTrigger &&
           s.arm_gap < 600.0;
}

// Kernel contour redrawn through the stationary point: vertical segment at
// Re = xi*, arms at Im = +-pi starting from it. Along the segment the
// integrand is one near-Gaussian lump with a stationary phase, so nothing
// cancels and full relative precision survives arbitrarily deep into the
// small-a regime. Everything is integrated in units of e^{log_value}
// (reported back through Raw::log_scale), which keeps the arithmetic in
// range even when the kernel itself is far below the smallest double.
// Folding the conjugate halves leaves: value = (1/pi) Re int_0^V f(xi*+iv) dv
// plus, when the arms are not negligibly far below the peak,
// (1/pi) int_{xi*}^T e^{(pi^2-x^2)/(2t)} sinh(x) e^{-a cosh x} sin(pi x/t) dx.
Raw saddle_raw(double t, double a, const Saddle& s,
               const QuadratureConfig& q) {
    double L = tail_log_inv_tol(q);
    double xs = s.xi;
    double S = s.log_value;
    double inv2t = 1.0 / (2.0 * t);
    double log2 = std::log(2.0);
    bool arms = s.arm_gap > -(L + 5.0);
    // the segment profile decays like e^{-(a cosh(xi*) - 1/t) v^2 / 2}; keep
    // the full height whenever the arms (which the segment must meet) matter
    double h2 = std::max(a * std::cosh(xs) - 1.0 / t, 1e-3 / t);
    double V =
        arms ? kPi : std::min(kPi, 1.25 * std::sqrt(2.0 * L / h2) + 0.15);
    auto seg = [&](double v) {
        Complex xi(xs, v);
        Complex e = -xi * xi * inv2t + a * std::cosh(xi) + xi - log2 - S;
        return (std::exp(e) * (1.0 - std::exp(-2.0 * xi))).real();
    };
    IntegralResult rs = integrate_r(seg, 0.0, V, q);
    double value = rs.value / kPi;
    double err = rs.abs_error / kPi;
    double l1 = rs.l1 / kPi;
    if (arms) {
        double T = std::sqrt(xs * xs + kPi * kPi + 2.0 * t * L);
        auto arm = [&](double x) {
            double e = (kPi * kPi - x * x) * inv2t - a * std::cosh(x) +
                       log_sinh(x) - S;
            return e < -745.0 ? 0.0 : std::exp(e) * std::sin(kPi * x / t);
        };
        IntegralResult ra = integrate_r(arm, xs, T, q);
        value += ra.value / kPi;
        err += ra.abs_error / kPi;
        l1 += ra.l1 / kPi;
    }
    clip_noise(l1, value, err);
    return {value, err, S};
}

// re-express a Raw in units of e^{ls} without leaving log space
Raw rebase_raw(const Raw& r, double ls) {
    Raw out{0.0, 0.0, ls};
    double shift = r.log_scale - ls;
    if (r.value != 0.0) {
        double m = std::log(std::abs(r.value)) + shift;
        if (m > -744.0) out.value = std::copysign(std::exp(m), r.value);
    }
    if (r.err > 0.0) {
        double m = std::log(r.err) + shift;
        if (m > -744.0) out.err = std::exp(m);
    }
    return out;
}

// inner kernel of the first representation at fixed x, unscaled; the shared
// scale is reported through Raw::log_scale (identical for every x)
std::function<Raw(double)> make_yor_inner(double t, double sw, Variant v,
                                          const ContourSpec& c,
                                          const QuadratureConfig& q) {
    switch (v) {
        case Variant::theta_pi:
            return [t, sw, q](double x) {
                double a = 2.0 * x * sw;
                double ls = kPi * kPi / (2.0 * t) - std::log(kPi);
                Saddle s = kernel_saddle(t, a);
                if (saddle_wanted(t, s)) {
                    if (s.log_value < -760.0) return Raw{0.0, 0.0, ls};
                    return rebase_raw(saddle_raw(t, a, s, q), ls);
                }
                return ray_pi(
                    t, 1.0, [a](double u) { return std::exp(-a * std::cosh(u)); },
                    q);
            };
        case Variant::theta_half:
            return [t, sw, q](double x) {
                double a = 2.0 * x * sw;
                Saddle s = kernel_saddle(t, a);
                if (saddle_wanted(t, s)) {
                    double ls = kPi * kPi / (8.0 * t) - std::log(kPi);
                    if (s.log_value < -760.0) return Raw{0.0, 0.0, ls};
                    return rebase_raw(saddle_raw(t, a, s, q), ls);
                }
                return yor_half_raw(t, a, q);
            };
        case Variant::general:
        default:
            return [t, sw, c, q](double x) {
                double a = 2.0 * x * sw;
                RawC rc = ray_general(
                    t, 1.0, c,
                    [a](Complex xi) { return std::exp(a * std::cosh(xi)); }, q);
                return Raw{rc.value.real(), rc.err + std::abs(rc.value.imag()),
                           0.0};
            };
    }
}

// Outer integral int_0^inf x^p e^{-x^2} inner(x) dx, split at x = 1 with
// x = e^{-s} below. The imaginary channel carries the inner error estimates
// so they are integrated with the same weights as the values.
struct Outer {
    double value = 0.0;
    double err = 0.0;
};

Outer outer_integral(double pw, double t,
                     const std::function<Raw(double)>& inner,
                     const QuadratureConfig& q) {
    // below x_min = e^{-s_max} the inner kernel sinks under its own
    // cancellation noise (it vanishes like e^{-(ln x)^2/(2t)}), so the cutoff
    // scales with t; the weight x^{pw} sets the coupling term
    double s_max =
        std::max(0.0, -(pw + 1.0)) * t + std::sqrt(2.0 * t * std::log(1e12)) + 2.0;
    double x_up = 7.0 + 0.3 * std::max(pw, 0.0);
    auto low_w = [&](double s) {
        double x = std::exp(-s);
        return std::exp(-(pw + 1.0) * s - x * x);
    };
    auto up_w = [&](double x) {
        return std::pow(x, pw) * std::exp(-x * x);
    };
    // the value profile is smooth and refines cheaply; the inner error
    // estimates are bounds, not integrands, and chasing their roughness
    // adaptively burns panels for nothing, so they are propagated by a fixed
    // trapezoid pass instead
    IntegralResult rl = integrate_r(
        [&](double s) { return low_w(s) * inner(std::exp(-s)).value; }, 0.0,
        s_max, q);
    IntegralResult ru = integrate_r(
        [&](double x) { return up_w(x) * inner(x).value; }, 1.0, x_up, q);
    auto trap = [&](auto f, double a, double b) {
        const int n = 48;
        double h = (b - a) / n;
        double acc = 0.5 * (f(a) + f(b));
        for (int i = 1; i < n; ++i) acc += f(a + i * h);
        return acc * h;
    };
    double el = trap(
        [&](double s) { return low_w(s) * inner(std::exp(-s)).err; }, 0.0,
        s_max);
    double eu =
        trap([&](double x) { return up_w(x) * inner(x).err; }, 1.0, x_up);
    Outer out;
    out.value = rl.value + ru.value;
    out.err = rl.abs_error + ru.abs_error + el + eu;
    return out;
}

EvalResult assemble(double log_pref, const Raw& r, Route route, bool slow) {
    EvalResult out;
    out.route = route;
    out.slow_convergence = slow;
    double ls = log_pref + r.log_scale;
    if (r.value != 0.0 && std::isfinite(ls)) {
        double m = ls + std::log(std::abs(r.value));
        out.value = std::copysign(std::exp(m), r.value);
    }
    if (r.err > 0.0 && std::isfinite(ls)) out.abs_error = std::exp(ls + std::log(r.err));
    return out;
}

void check_kernel_args(double t, double a) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw BadParameter("kernel: time must be positive and finite");
    if (!(a >= 0.0))
        throw BadParameter("kernel: argument must be nonnegative");
}

} // namespace

Prefactor prefactor(const ModelParams& p) {
    p.validate();
    if (-std::log(p.w) / p.eps > 709.0)
        throw OverflowError("prefactor: w^(-1/eps) exceeds the range of exp");
    double lc = log_prefactor(p);
    return {std::exp(lc), lc};
}

double hw_kernel(double t, double a, Variant v, const ContourSpec& c,
                 const QuadratureConfig& q, double* abs_err) {
    check_kernel_args(t, a);
    q.validate();
    // a general contour's vertical segment carries weight e^{a cosh(ln R)}
    // against a result of size e^{-a}: past a ~ 15 the cancellation exceeds
    // double precision, so the exactly equivalent theta-pi form takes over
    if (v == Variant::general && a > 15.0) v = Variant::theta_pi;
    Raw r;
    Saddle sp = v == Variant::general ? Saddle{} : kernel_saddle(t, a);
    if (saddle_wanted(t, sp)) {
        if (sp.log_value < -760.0) {
            if (abs_err) *abs_err = 0.0;
            return 0.0;
        }
        r = saddle_raw(t, a, sp, q);
    } else switch (v) {
        case Variant::general: {
            RawC rc = ray_general(
                t, 1.0, c,
                [a](Complex xi) { return std::exp(a * std::cosh(xi)); }, q);
            r = Raw{rc.value.real(), rc.err + std::abs(rc.value.imag()), 0.0};
            break;
        }
        case Variant::theta_half:
            r = yor_half_raw(t, a, q);
            break;
        case Variant::theta_pi:
        default:
            r = ray_pi(
                t, 1.0, [a](double u) { return std::exp(-a * std::cosh(u)); },
                q);
            break;
    }
    double value = 0.0;
    if (r.value != 0.0)
        value = std::copysign(std::exp(r.log_scale + std::log(std::abs(r.value))),
                              r.value);
    if (abs_err)
        *abs_err = r.err > 0.0 ? std::exp(r.log_scale + std::log(r.err)) : 0.0;
    return value;
}

double psi(double x, const ModelParams& p, const ContourSpec& c,
           const QuadratureConfig& q) {
    p.validate();
    q.validate();
    if (!(x >= 0.0)) throw BadParameter("psi: x must be nonnegative");
    double a = 2.0 * x * kernel_scale(p.eps, p.w);
    RawC rc = ray_general(
        p.t, 1.0, c, [a](Complex xi) { return std::exp(a * std::cosh(xi)); }, q);
    double re = rc.value.real();
    double im = rc.value.imag();
    if (std::abs(im) > 1e-6 * (std::abs(re) + 1.0) + 100.0 * rc.err)
        throw NoConvergence("psi: contour integral failed to come out real");
    return re;
}

EvalResult density_yor(const ModelParams& p, Variant v, const ContourSpec& c,
                       const QuadratureConfig& q) {
    p.validate();
    q.validate();
    double sw = kernel_scale(p.eps, p.w);
    Route route = v == Variant::general
                      ? Route::yor_general
                      : (v == Variant::theta_half ? Route::yor_theta_half
                                                  : Route::yor_theta_pi);
    // deep in the tails the prefactor is so far below the smallest double
    // that no admissible kernel value can lift it back; skip the integrals.
    // The slack over-covers the growth the outer weight can contribute.
    double slack = 40.0 * (1.0 + (1.0 + std::abs(p.nu)) *
                                     (1.0 + std::abs(p.nu)) * (1.0 + p.t));
    if (log_prefactor(p) + kPi * kPi / (2.0 * p.t) < -745.0 - slack)
        return {0.0, 0.0, route, false};
    auto inner = make_yor_inner(p.t, sw, v, c, q);
    // every inner call shares one log_scale; fetch it from the variant
    double log_scale = v == Variant::theta_pi
                           ? kPi * kPi / (2.0 * p.t) - std::log(kPi)
                           : (v == Variant::theta_half
                                  ? kPi * kPi / (8.0 * p.t) - std::log(kPi)
                                  : 0.0);
    Outer out = outer_integral(p.nu, p.t, inner, q);
    return assemble(log_prefactor(p), Raw{out.value, out.err, log_scale}, route,
                    p.nu <= -1.0);
}

EvalResult density_hermite(const ModelParams& p, Variant v,
                           const ContourSpec& c, const QuadratureConfig& q) {
    p.validate();
    q.validate();
    double r0 = std::round(p.nu);
    if (r0 <= -1.0 && std::abs(p.nu - r0) <= kNegIntegerGuard)
        throw NegativeIntegerDegree(
            "density_hermite: nu within 1e-6 of a negative integer (Gamma pole); "
            "use the first representation");
    double sw = kernel_scale(p.eps, p.w);
    double mu_h = -(p.nu + 1.0); // Hermite degree
    double coupling = 1.0 + std::max(0.0, -(p.nu + 1.0));
    Route hroute = v == Variant::general
                       ? Route::hermite_general
                       : (v == Variant::theta_half ? Route::hermite_theta_half
                                                   : Route::hermite_theta_pi);
    double slack = 40.0 * (1.0 + (1.0 + std::abs(p.nu)) *
                                     (1.0 + std::abs(p.nu)) * (1.0 + p.t));
    if (log_prefactor(p) + kPi * kPi / (2.0 * p.t) < -745.0 - slack)
        return {0.0, 0.0, hroute, false};
    Raw r;
    switch (v) {
        case Variant::theta_pi:
            r = ray_pi(
                p.t, coupling,
                [&](double u) {
                    return hermite_h(mu_h, Complex(sw * std::cosh(u), 0.0)).real();
                },
                q);
            break;
        case Variant::theta_half:
            r = ray_half(
                p.t, coupling,
                [&](double u) {
                    return hermite_h(mu_h, Complex(0.0, -sw * std::sinh(u)));
                },
                q);
            break;
        case Variant::general:
        default: {
            RawC rc = ray_general(
                p.t, coupling, c,
                [&](Complex xi) { return hermite_h(mu_h, -std::cosh(xi) * sw); },
                q);
            r = Raw{rc.value.real(), rc.err + std::abs(rc.value.imag()), 0.0};
            break;
        }
    }
    SignedLogGamma slg = log_gamma_signed(p.nu + 1.0);
    Raw folded{r.value * slg.sign, r.err, r.log_scale + slg.log_abs};
    EvalResult out = assemble(log_prefactor(p), folded, hroute, false);
    // Once the raw integral keeps fewer digits than any stated tolerance
    // (clipped to zero outright, or error within 1e-5 of the value), this
    // kernel has nothing left to say: it does not admit the redrawn contour.
    // The first representation reaches the same density through a kernel
    // that does, so adopt its answer whenever it is actually sharper.
    if (v != Variant::general && r.err > 0.0 &&
        r.err > 1e-5 * std::abs(r.value)) {
        EvalResult fb = density_yor(p, v, c, q);
        if (fb.abs_error < out.abs_error) {
            fb.route = hroute;
            return fb;
        }
    }
    return out;
}

Complex p_function(Complex mu, double eps, double t, double w,
                   const ContourSpec& /*c: inner kernel uses theta = pi*/,
                   const QuadratureConfig& q) {
    if (!(t > 0.0) || !(w > 0.0) || eps == 0.0 || !std::isfinite(eps))
        throw BadParameter("p_function: need t > 0, w > 0, eps != 0");
    q.validate();
    double log_scale = kPi * kPi / (2.0 * t) - std::log(kPi);
    if (log_scale > 700.0)
        throw OverflowError("p_function: t too small for unscaled evaluation");
    double sw = kernel_scale(eps, w);
    auto inner = make_yor_inner(t, sw, Variant::theta_pi, ContourSpec{}, q);
    double rp = mu.real();
    double s_max =
        std::max(0.0, -(rp + 1.0)) * t + std::sqrt(2.0 * t * std::log(1e12)) + 2.0;
    double x_up = 7.0 + 0.3 * std::max(rp, 0.0);
    auto low = [&](double s) -> Complex {
        double x = std::exp(-s);
        return std::exp(-(mu + 1.0) * s - x * x) * inner(x).value;
    };
    auto up = [&](double x) -> Complex {
        return std::exp(mu * std::log(x) - x * x) * inner(x).value;
    };
    Complex j =
        integrate_c(low, 0.0, s_max, q).value + integrate_c(up, 1.0, x_up, q).value;
    return std::exp(log_scale) * j;
}

Complex f_function(Complex mu, double eps, double t, double w,
                   const ContourSpec& c, const QuadratureConfig& q) {
    if (!(t > 0.0) || !(w > 0.0) || eps == 0.0 || !std::isfinite(eps))
        throw BadParameter("f_function: need t > 0, w > 0, eps != 0");
    q.validate();
    double sw = kernel_scale(eps, w);
    double coupling = 1.0 + std::max(0.0, -(mu.real() + 1.0));
    RawC rc = ray_general(
        t, coupling, c,
        [&](Complex xi) { return hermite_h(-(mu + 1.0), -std::cosh(xi) * sw); },
        q);
    return rc.value;
}

double conditional_density(double x, const ModelParams& p, const ContourSpec& c,
                           const QuadratureConfig& q) {
    p.validate();
    q.validate();
    if (std::abs(x) > 600.0) return 0.0; // kernel underflows far sooner
    double lw = std::log(p.w) / p.eps; // ln w^{1/eps}
    double eta = std::exp(x - lw);
    double kerr = 0.0;
    double K = eta <= 15.0 ? hw_kernel(p.t, eta, Variant::general, c, q, &kerr)
                           : hw_kernel(p.t, eta, Variant::theta_pi, c, q, &kerr);
    if (K == 0.0) return 0.0;
    double expo = -std::log(std::abs(p.eps)) + x - (1.0 + 1.0 / p.eps) * std::log(p.w) +
                  x * x / (2.0 * p.t) -
                  0.5 * (1.0 + std::exp(2.0 * x)) * std::exp(-lw);
    if (!std::isfinite(expo)) return 0.0;
    return std::copysign(std::exp(expo + std::log(std::abs(K))), K);
}

EvalResult density(const ModelParams& p, const QuadratureConfig& q) {
    p.validate();
    double r0 = std::round(p.nu);
    if (r0 <= -1.0 && std::abs(p.nu - r0) <= kNegIntegerGuard)
        return density_yor(p, Variant::theta_pi, ContourSpec{}, q);
    return density_hermite(p, Variant::theta_pi, ContourSpec{}, q);
}

} // namespace asiad
