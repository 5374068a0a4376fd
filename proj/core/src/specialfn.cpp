#include "asiad/specialfn.hpp"

#include <cmath>
#include <limits>

#include "asiad/dd.hpp"
#include "asiad/errors.hpp"

namespace asiad {

namespace {

using detail::cdd;
using detail::dd;

constexpr double kPi = 3.14159265358979323846;
constexpr double kDeltaPole = 1e-12;

// Lanczos rational approximation, g = 607/128, 15 coefficients.
constexpr double kG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

// Taylor coefficients of 1/Gamma at 0, double-double, truncation error below
// 2e-37 for |z| <= 1.3.
constexpr dd kRgTaylor[51] = {
    {0.00000000000000000e+00, 0.00000000000000000e+00},
    {1.00000000000000000e+00, 0.00000000000000000e+00},
    {5.77215664901532866e-01, -4.94291515243064487e-18},
    {-6.55878071520253902e-01, 2.13718519706853600e-17},
    {-4.20026350340952370e-02, 1.49203062856505051e-18},
    {1.66538611382291479e-01, 1.01891445468420257e-17},
    {-4.21977345555443334e-02, -3.35799926824801341e-18},
    {-9.62197152787697303e-03, -5.30003136883026263e-19},
    {7.21894324666309990e-03, -3.60065370633942833e-19},
    {-1.16516759185906517e-03, 5.65994785388098081e-20},
    {-2.15241674114950975e-04, 2.37586861807293640e-21},
    {1.28050282388116196e-04, -9.35912449919896746e-21},
    {-2.01348547807882387e-05, 3.04887739720373854e-23},
    {-1.25049348214267063e-06, -2.66214092271897989e-23},
    {1.13302723198169593e-06, -4.62223521210486883e-23},
    {-2.05633841697760707e-07, -3.00616016186451344e-24},
    {6.11609510448141609e-09, -2.69345829817130605e-25},
    {5.00200764446922295e-09, -1.53812361405675086e-26},
    {-1.18127457048702004e-09, -1.00523561557162075e-25},
    {1.04342671169110054e-10, -2.92984199568250347e-27},
    {7.78226343990507081e-12, 4.39725555659584800e-28},
    {-3.69680561864220598e-12, 2.70500349217038853e-28},
    {5.10037028745447575e-13, 2.25300146108587812e-29},
    {-2.05832605356650664e-14, -1.47474814919543357e-30},
    {-5.34812253942301782e-15, -1.62083846863565681e-31},
    {1.22677862823826084e-15, -5.07291514602386667e-32},
    {-1.18125930169745883e-16, 6.42225783814968121e-33},
    {1.18669225475160037e-18, -4.20372654942260141e-35},
    {1.41238065531803186e-18, -7.57694670111629379e-35},
    {-2.29874568443537022e-19, 1.33354819170691447e-36},
    {1.71440632192733743e-20, 5.23071515042693490e-38},
    {1.33735173049369309e-22, 2.64340596490792282e-39},
    {-2.05423355176667283e-22, 3.68568924245689534e-39},
    {2.73603004860800013e-23, -2.85993154163977739e-39},
    {-1.73235644591051646e-24, -1.75408835081975981e-40},
    {-2.36061902449928716e-26, -1.26022501699578495e-42},
    {1.86498294171729434e-26, 8.77477561729096511e-43},
    {-2.21809562420719727e-27, 6.80964031504275306e-44},
    {1.29778197494799370e-28, -3.32569246680409291e-45},
    {1.18069747496652841e-30, -4.18494927596651621e-48},
    {-1.12458434927708807e-30, -2.01842815487355000e-47},
    {1.27708517514086610e-31, 1.05356323678787535e-47},
    {-7.39145116961514100e-33, 1.81142532683661454e-49},
    {1.13475025755421581e-35, -4.97910587150133061e-52},
    {4.63913464105872200e-35, 2.60406348599750976e-52},
    {-5.34733681843919864e-36, -2.31129569127147327e-52},
    {3.20799592361335242e-37, 2.00260253243001796e-53},
    {-4.44582973655075666e-39, -2.22175210019956712e-55},
    {-1.31117451888198878e-39, 6.77884564695514041e-56},
    {1.64703335254381392e-40, -3.07006889272340579e-57},
    {-1.05623317850358118e-41, -3.55647357790114691e-58}};

// Neumaier compensated accumulator
struct NeuSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double t = s + x;
        c += std::fabs(s) >= std::fabs(x) ? (s - t) + x : (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

Complex gamma_positive(Complex z) { // Re(z) >= 0.5
    Complex s{kLanczos[0], 0.0};
    for (int k = 1; k < 15; ++k) s += kLanczos[k] / (z + double(k - 1));
    Complex t = z + (kG - 0.5);
    return std::sqrt(2.0 * kPi) * std::exp((z - 0.5) * std::log(t) - t) * s;
}

Complex kummer_raw(Complex a, Complex b, Complex z) {
    Complex term{1.0, 0.0};
    NeuSum sr, si;
    sr.add(1.0);
    int quiet = 0;
    for (int k = 0; k < 10000; ++k) {
        term *= (a + double(k)) / (b + double(k)) * z / double(k + 1);
        sr.add(term.real());
        si.add(term.imag());
        double mag = std::hypot(sr.value(), si.value());
        if (std::abs(term) <= 1e-17 * mag + 1e-300) {
            if (++quiet >= 2) return {sr.value(), si.value()};
        } else {
            quiet = 0;
        }
    }
    throw NoConvergence("kummer_phi: 10000-term cap exhausted");
}

cdd kummer_dd_raw(cdd a, cdd b, cdd z) {
    cdd term{dd(1.0)};
    cdd sum = term;
    int quiet = 0;
    for (int k = 0; k < 10000; ++k) {
        term = term * (a + cdd{dd(double(k))}) / (b + cdd{dd(double(k))});
        term = term * z / cdd{dd(double(k + 1))};
        sum = sum + term;
        if (detail::cdd_abs(term) <= 1e-34 * detail::cdd_abs(sum) + 1e-300) {
            if (++quiet >= 2) return sum;
        } else {
            quiet = 0;
        }
    }
    throw NoConvergence("kummer series (double-double): cap exhausted");
}

cdd kummer_dd(cdd a, cdd b, cdd z) {
    if (z.re.hi < 0.0) return detail::cdd_exp(z) * kummer_dd_raw(b - a, b, -z);
    return kummer_dd_raw(a, b, z);
}

// Two-Kummer definition summed in double-double: the combination cancels
// like exp(Re z^2), which costs ~16 digits at |z| = 6; double-double keeps
// the result good to ~1e-15 relative there.
Complex hermite_series_dd(Complex mu_, Complex z_) {
    cdd mu{mu_}, z{z_};
    cdd z2 = z * z;
    cdd half{dd(0.5)};
    cdd a1 = -(half * mu);                 // -mu/2
    cdd a2 = (cdd{dd(1.0)} - mu) * half;   // (1-mu)/2
    cdd phi1 = kummer_dd(a1, cdd{dd(0.5)}, z2);
    cdd phi2 = kummer_dd(a2, cdd{dd(1.5)}, z2);
    cdd rg1 = detail::rgamma_dd(a2);       // 1/Gamma((1-mu)/2)
    cdd rg2 = detail::rgamma_dd(a1);       // 1/Gamma(-mu/2)
    cdd p2m = detail::cdd_exp(mu * cdd{detail::dd_ln2}); // 2^mu
    cdd bracket = rg1 * phi1 - (cdd{dd(2.0)} * z) * (rg2 * phi2);
    return to_complex(p2m * cdd{detail::dd_sqrtpi} * bracket);
}

Complex hermite_poly(int n, Complex z) {
    if (n == 0) return {1.0, 0.0};
    Complex hm1{1.0, 0.0};
    Complex h = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        Complex hp = 2.0 * z * h - 2.0 * double(k) * hm1;
        hm1 = h;
        h = hp;
    }
    return h;
}

// Asymptotic sum with automatic termination at the smallest term; *relerr
// receives (smallest term)/(sum) as the relative accuracy actually reached.
Complex hermite_asym_auto(Complex mu, Complex z, int cap, double* relerr) {
    Complex iz2 = 1.0 / (4.0 * z * z);
    Complex term{1.0, 0.0}, sum{1.0, 0.0};
    double last = 1.0;
    for (int k = 0; k < cap; ++k) {
        Complex next =
            term * (-((-mu + 2.0 * double(k)) * (-mu + 2.0 * double(k) + 1.0)) *
                    iz2 / double(k + 1));
        double an = std::abs(next);
        if (k > 2 && an >= last) break; // divergence onset: stop at min term
        term = next;
        sum += term;
        last = an;
        if (an <= 1e-18 * std::abs(sum)) break;
    }
    if (relerr) *relerr = last / std::max(std::abs(sum), 1e-300);
    return std::exp(mu * std::log(2.0 * z)) * sum;
}

} // namespace

Complex gamma_complex(Complex z) {
    double n = std::nearbyint(z.real());
    if (n <= 0.0 && std::abs(z - Complex(n, 0.0)) < kDeltaPole)
        throw PoleError("gamma_complex: argument within 1e-12 of pole at " +
                        std::to_string(static_cast<long>(n)));
    if (z.real() < 0.5)
        return kPi / (std::sin(kPi * z) * gamma_positive(1.0 - z));
    return gamma_positive(z);
}

Complex kummer_phi(Complex a, Complex b, Complex z) {
    double nb = std::nearbyint(b.real());
    if (nb <= 0.0 && std::abs(b - Complex(nb, 0.0)) < kDeltaPole)
        throw BadParameter("kummer_phi: b within 1e-12 of non-positive integer");
    if (z.real() < 0.0) return std::exp(z) * kummer_raw(b - a, b, -z);
    return kummer_raw(a, b, z);
}

Complex hermite_h_negdeg(Complex mu, Complex z, const QuadratureConfig& q) {
    if (!(mu.real() < 0.0))
        throw DomainError("hermite_h_negdeg: requires Re(mu) < 0");
    const double a = z.real();
    if (a < 0.0 && a * a > 690.0)
        throw OverflowError(
            "hermite_h_negdeg: integrand scale exp((Re z)^2) exceeds double "
            "range");
    const Complex ex = -(mu + 1.0); // u-power in the integrand
    auto f = [&](double u) -> Complex {
        return std::exp(ex * std::log(u) - Complex(u * u, 0.0) - 2.0 * z * u);
    };
    const double U = std::max(0.0, -a) + 7.5;
    // tanh-sinh absorbs the u^{-(mu+1)} endpoint behaviour (integrable
    // singularity for -1 < Re mu < 0, fractional-power derivatives otherwise)
    ComplexIntegralResult head = integrate_tanh_sinh(f, 0.0, 1.0, q);
    ComplexIntegralResult tail = integrate(f, 1.0, U, q);
    return (head.value + tail.value) / gamma_complex(-mu);
}

Complex hermite_asymptotic(Complex mu, Complex z, int n, double* err) {
    if (n < 1) throw BadParameter("hermite_asymptotic: need n >= 1 terms");
    if (!(std::abs(std::arg(z)) < 0.75 * kPi))
        throw DomainError("hermite_asymptotic: z outside |arg z| < 3pi/4");
    Complex iz2 = 1.0 / (4.0 * z * z);
    Complex term{1.0, 0.0}, sum{1.0, 0.0};
    for (int k = 0; k + 1 < n; ++k) {
        term *= -((-mu + 2.0 * double(k)) * (-mu + 2.0 * double(k) + 1.0)) *
                iz2 / double(k + 1);
        sum += term;
    }
    Complex pref = std::exp(mu * std::log(2.0 * z));
    if (err) {
        Complex omit = term *
                       (-((-mu + 2.0 * double(n - 1)) *
                          (-mu + 2.0 * double(n - 1) + 1.0))) *
                       iz2 / double(n);
        *err = std::abs(omit * pref);
    }
    return pref * sum;
}

HermiteValue hermite_h_info(Complex mu, Complex z, const HermiteConfig& cfg) {
    double n = std::nearbyint(mu.real());
    if (n >= 0.0 && n <= 400.0 &&
        std::abs(mu - Complex(n, 0.0)) <= cfg.int_degree_tol)
        return {hermite_poly(static_cast<int>(n), z), HermiteRegime::series};
    if (std::abs(z) <= cfg.series_z_max)
        return {hermite_series_dd(mu, z), HermiteRegime::series};
    if (std::abs(std::arg(z)) < 0.75 * kPi - cfg.sector_margin) {
        double rel = 0.0;
        Complex v = hermite_asym_auto(mu, z, cfg.max_asym_terms, &rel);
        if (rel <= 1e-10) return {v, HermiteRegime::asymptotic};
        // fall through to the integral representation when the expansion
        // cannot reach tolerance at this |z| (only possible with a lowered
        // series_z_max or extreme mu)
    }
    if (mu.real() < 0.0)
        return {hermite_h_negdeg(mu, z, cfg.quad),
                HermiteRegime::negative_degree_integral};
    // shift the degree below zero and climb back with the recurrence
    // H_{m+1} = 2z H_m - 2m H_{m-1}; few steps, and the competing solution
    // grows slower than H itself for these z, so the climb is stable
    int m = static_cast<int>(std::floor(mu.real())) + 1;
    Complex mu0 = mu - double(m);
    Complex hm1 = hermite_h_negdeg(mu0 - 1.0, z, cfg.quad);
    Complex h = hermite_h_negdeg(mu0, z, cfg.quad);
    for (int k = 0; k < m; ++k) {
        Complex hp = 2.0 * z * h - 2.0 * (mu0 + double(k)) * hm1;
        hm1 = h;
        h = hp;
    }
    return {h, HermiteRegime::negative_degree_integral};
}

Complex hermite_h(Complex mu, Complex z, const HermiteConfig& cfg) {
    return hermite_h_info(mu, z, cfg).value;
}

Complex bessel_i_series(Complex rho, Complex eta) {
    double nr = std::nearbyint(rho.real());
    if (nr <= -1.0 && std::abs(rho - Complex(nr, 0.0)) < kDeltaPole)
        throw BadParameter("bessel_i_series: rho at a negative integer");
    if (eta == Complex(0.0, 0.0)) {
        if (rho == Complex(0.0, 0.0)) return {1.0, 0.0};
        if (rho.real() > 0.0) return {0.0, 0.0};
        throw BadParameter("bessel_i_series: eta = 0 needs Re(rho) >= 0");
    }
    Complex q = 0.25 * eta * eta;
    Complex term = 1.0 / gamma_complex(rho + 1.0);
    NeuSum sr, si;
    sr.add(term.real());
    si.add(term.imag());
    int quiet = 0;
    bool converged = false;
    for (int k = 0; k < 10000 && !converged; ++k) {
        term *= q / (double(k + 1) * (rho + double(k + 1)));
        sr.add(term.real());
        si.add(term.imag());
        double mag = std::hypot(sr.value(), si.value());
        if (std::abs(term) <= 1e-17 * mag + 1e-300) {
            converged = ++quiet >= 2;
        } else {
            quiet = 0;
        }
    }
    if (!converged) throw NoConvergence("bessel_i_series: 10000-term cap");
    return std::exp(rho * std::log(0.5 * eta)) *
           Complex{sr.value(), si.value()};
}

Complex bessel_i_contour(Complex rho, Complex eta, const ContourSpec& c,
                         const QuadratureConfig& q) {
    if (!(eta.real() > 0.0))
        throw BadParameter("bessel_i_contour: requires Re(eta) > 0");
    auto f = [&](Complex xi) {
        return std::exp(-rho * xi + eta * std::cosh(xi));
    };
    return integrate(f, c, q).value;
}

namespace detail {

cdd rgamma_dd(cdd s) {
    // off the strip |Im| <= 1.2 the Taylor radius is exceeded; only complex
    // degrees land here and double precision suffices for them
    if (std::fabs(s.im.hi) > 1.2) {
        Complex g = gamma_complex(to_complex(s));
        return cdd{Complex(1.0 / g)};
    }
    double m = std::nearbyint(s.re.hi);
    bool exact_int = s.re.lo == 0.0 && s.im.hi == 0.0 && s.im.lo == 0.0 &&
                     s.re.hi == m;
    if (exact_int) {
        if (m <= 0.0) return cdd{};        // zeros of 1/Gamma
        if (m > 171.0) return cdd{};       // 1/Gamma(m) underflows
        dd f{1.0};
        for (double j = 2.0; j < m; j += 1.0) f = f * dd(j);
        return cdd{dd(1.0) / f};
    }
    cdd s0 = s - cdd{dd(m)};
    cdd p{};
    for (int k = 50; k >= 0; --k) p = p * s0 + cdd{kRgTaylor[k]};
    if (m == 0.0) return p;
    if (m > 0.0) {
        // 1/Gamma(s) = (1/Gamma(s0)) / prod_{j=0}^{m-1}(s0+j); the near-zero
        // first factor divides out with full relative accuracy because s0 is
        // exact in double-double
        for (double j = 0.0; j < m; j += 1.0) p = p / (s0 + cdd{dd(j)});
        return p;
    }
    for (double j = 0.0; j < -m; j += 1.0) p = p * (s + cdd{dd(j)});
    return p;
}

} // namespace detail

} // namespace asiad
