#include "asiad/dd.hpp"

#include <cmath>
#include <limits>

namespace asiad::detail {

namespace {

// exp(a) - 1 by Taylor series, |a| <= ln2/1024, truncation below 2^-110
dd expm1_small(dd a) {
    dd term = a;
    dd sum = a;
    for (int k = 2; k < 12; ++k) {
        term = term * a / dd{static_cast<double>(k), 0.0};
        sum = sum + term;
        if (std::fabs(term.hi) < 1e-35 * std::fabs(sum.hi)) break;
    }
    return sum;
}

} // namespace

dd dd_exp(dd a) {
    if (a.hi > 709.0) return {std::numeric_limits<double>::infinity(), 0.0};
    if (a.hi < -745.0) return {0.0, 0.0};
    // a = k ln2 + r, exp(a) = 2^k exp(r); exp(r) via (r/512) and 9 doublings
    double k = std::nearbyint(a.hi / dd_ln2.hi);
    dd r = a - dd_ln2 * dd{k, 0.0};
    r = mul_pwr2(r, 1.0 / 512.0);
    dd s = expm1_small(r); // exp(r/512) - 1
    for (int i = 0; i < 9; ++i) s = mul_pwr2(s, 2.0) + s * s;
    dd e = s + dd{1.0, 0.0};
    int ki = static_cast<int>(k);
    return {std::ldexp(e.hi, ki), std::ldexp(e.lo, ki)};
}

dd dd_log(dd a) {
    // Newton step on exp(y) = a from the double seed: doubles the digits
    double y0 = std::log(a.hi);
    dd y{y0, 0.0};
    return y + a * dd_exp(-y) - dd{1.0, 0.0};
}

dd dd_sqrt(dd a) {
    if (a.hi == 0.0) return {0.0, 0.0};
    double x = 1.0 / std::sqrt(a.hi);
    double ax = a.hi * x;
    dd err = a - dd{ax, 0.0} * dd{ax, 0.0};
    return dd{ax, 0.0} + dd{err.hi * (x * 0.5), 0.0};
}

void dd_sincos(dd a, dd& s, dd& c) {
    // reduce modulo pi/2; our arguments stay below ~1e3 so the dd value of
    // pi/2 keeps the reduced argument accurate to ~1e-30 absolute
    double q = std::nearbyint(a.hi / dd_pi_2.hi);
    dd r = a - dd_pi_2 * dd{q, 0.0};
    long quadrant = static_cast<long>(std::fmod(q, 4.0));
    if (quadrant < 0) quadrant += 4;

    dd r2 = r * r;
    dd sr = r, term = r;
    for (int k = 1; k < 20; ++k) {
        term = term * r2 / dd{static_cast<double>(2 * k * (2 * k + 1)), 0.0};
        sr = (k & 1) ? sr - term : sr + term;
        if (std::fabs(term.hi) < 1e-35) break;
    }
    dd cr{1.0, 0.0};
    term = dd{1.0, 0.0};
    for (int k = 1; k < 20; ++k) {
        term = term * r2 / dd{static_cast<double>(2 * k * (2 * k - 1)), 0.0};
        cr = (k & 1) ? cr - term : cr + term;
        if (std::fabs(term.hi) < 1e-35) break;
    }
    switch (quadrant) {
        case 0: s = sr; c = cr; break;
        case 1: s = cr; c = -sr; break;
        case 2: s = -sr; c = -cr; break;
        default: s = -cr; c = sr; break;
    }
}

} // namespace asiad::detail
