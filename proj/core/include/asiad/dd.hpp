#pragma once

// Double-double arithmetic (~31 significant decimal digits) after Dekker and
// Bailey.  Used where a summation cancels catastrophically in plain double
// (the two-Kummer combination behind the Hermite function grows like
// exp(Re z^2) before cancelling) and as the extended-precision oracle mode
// for series cross-checks in the tests.

#include <cmath>
#include <complex>

namespace asiad::detail {

struct dd {
    double hi = 0.0;
    double lo = 0.0;
    constexpr dd() = default;
    constexpr dd(double h) : hi(h) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}
    explicit operator double() const { return hi; }
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}
inline dd quick_two_sum(double a, double b) { // requires |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}
inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd operator+(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}
inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }
inline dd operator*(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}
inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * dd(q1);
    double q2 = r.hi / b.hi;
    r = r - b * dd(q2);
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return q + dd(q3);
}
inline dd operator+(dd a, double b) { return a + dd(b); }
inline dd operator-(dd a, double b) { return a - dd(b); }
inline dd operator*(dd a, double b) { return a * dd(b); }
inline dd operator/(dd a, double b) { return a / dd(b); }
inline dd operator*(double a, dd b) { return dd(a) * b; }
inline dd operator+(double a, dd b) { return dd(a) + b; }

inline dd mul_pwr2(dd a, double p) { return {a.hi * p, a.lo * p}; } // p a power of 2
inline double to_double(dd a) { return a.hi; }
inline dd dd_abs(dd a) { return a.hi < 0.0 ? -a : a; }
inline bool operator<(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }

dd dd_exp(dd a);
dd dd_log(dd a);
void dd_sincos(dd a, dd& s, dd& c);
dd dd_sqrt(dd a);

inline constexpr dd dd_pi    {3.141592653589793,     1.2246467991473532e-16};
inline constexpr dd dd_2pi   {6.283185307179586,     2.4492935982947064e-16};
inline constexpr dd dd_pi_2  {1.5707963267948966,    6.123233995736766e-17};
inline constexpr dd dd_ln2   {0.6931471805599453,    2.3190468138462996e-17};
inline constexpr dd dd_sqrtpi{1.772453850905516,    -7.666586499825799e-17};

// ------------------------------------------------------------------ complex
struct cdd {
    dd re, im;
    constexpr cdd() = default;
    constexpr cdd(dd r) : re(r) {}
    constexpr cdd(dd r, dd i) : re(r), im(i) {}
    cdd(std::complex<double> z) : re(z.real()), im(z.imag()) {}
};

inline cdd operator+(cdd a, cdd b) { return {a.re + b.re, a.im + b.im}; }
inline cdd operator-(cdd a, cdd b) { return {a.re - b.re, a.im - b.im}; }
inline cdd operator-(cdd a) { return {-a.re, -a.im}; }
inline cdd operator*(cdd a, cdd b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline cdd operator*(cdd a, dd b) { return {a.re * b, a.im * b}; }
inline cdd operator*(dd a, cdd b) { return {a * b.re, a * b.im}; }
inline dd  norm2(cdd a) { return a.re * a.re + a.im * a.im; }
inline cdd conj(cdd a) { return {a.re, -a.im}; }
inline cdd operator/(cdd a, cdd b) {
    dd n = norm2(b);
    cdd p = a * conj(b);
    return {p.re / n, p.im / n};
}
inline cdd operator/(cdd a, dd b) { return {a.re / b, a.im / b}; }
inline double cdd_abs(cdd a) { return std::hypot(a.re.hi, a.im.hi); }
inline std::complex<double> to_complex(cdd a) { return {a.re.hi, a.im.hi}; }

/// exp for complex double-double
inline cdd cdd_exp(cdd z) {
    dd m = dd_exp(z.re);
    dd s, c;
    dd_sincos(z.im, s, c);
    return {m * c, m * s};
}

/// 1/Gamma(s) at double-double accuracy (entire: no poles, zeros at 0,-1,...).
cdd rgamma_dd(cdd s);

} // namespace asiad::detail
