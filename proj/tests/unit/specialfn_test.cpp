#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "asiad/contour.hpp"
#include "asiad/errors.hpp"
#include "asiad/specialfn.hpp"

using asiad::Complex;

namespace {
double rel(Complex got, Complex want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
} // namespace

TEST_CASE("gamma at classic points") {
    CHECK(rel(asiad::gamma_complex({0.5, 0.0}), {std::sqrt(M_PI), 0.0}) <
          1e-14);
    CHECK(rel(asiad::gamma_complex({5.0, 0.0}), {24.0, 0.0}) < 1e-14);
    // conjugation symmetry
    Complex z{1.3, 0.7};
    Complex a = asiad::gamma_complex(z);
    Complex b = asiad::gamma_complex(std::conj(z));
    CHECK(std::abs(a - std::conj(b)) < 1e-14 * std::abs(a));
    CHECK_THROWS_AS((void)asiad::gamma_complex({-3.0, 0.0}),
                    asiad::PoleError);
}

TEST_CASE("Kummer function terminates exactly for polynomial cases") {
    // a = -1 truncates: Phi(-1, b, z) = 1 - z/b
    Complex v = asiad::kummer_phi({-1.0, 0.0}, {0.5, 0.0}, {4.0, 0.0});
    CHECK(std::abs(v - Complex(-7.0, 0.0)) < 1e-13);
    CHECK_THROWS_AS(
        (void)asiad::kummer_phi({0.3, 0.0}, {-2.0, 0.0}, {1.0, 0.0}),
        asiad::BadParameter);
}

TEST_CASE("Hermite function frozen references") {
    struct Ref {
        Complex mu, z, want;
    };
    const Ref refs[] = {
        {{-1.5, 0.0},
         {14.142135623730951, 14.142135623730951},
         {0.001521230592460305573648191, -0.003648367148312501369850535}},
        {{-0.5, 0.0}, {3.0, 0.0}, {0.4005964274005703280044956, 0.0}},
        {{-1.0, 0.0}, {8.0, 0.0}, {0.06202273866950698170089382, 0.0}},
        {{-2.5, 0.0}, {5.5, 0.0}, {0.002327934747933928696846148, 0.0}},
        {{1.3, 0.0},
         {2.0, -1.0},
         {5.646040586658629250830387, -4.01377843519850707371386}},
        {{-0.9, 0.0}, {-7.0, 0.0}, {2605648187457602050840.538, 0.0}},
        {{-3.3, 0.0}, {0.25, 0.0}, {0.09499639237932212359501802, 0.0}},
    };
    for (const Ref& r : refs) {
        Complex got = asiad::hermite_h(r.mu, r.z);
        INFO("mu=", r.mu.real(), " z=(", r.z.real(), ",", r.z.imag(), ")");
        CHECK(rel(got, r.want) < 5e-13);
    }
}

TEST_CASE("Hermite special values") {
    // H_{-1}(0) = sqrt(pi)/2
    Complex h = asiad::hermite_h({-1.0, 0.0}, {0.0, 0.0});
    CHECK(rel(h, {0.886226925452758013649083741671, 0.0}) < 1e-14);
    // H_{-1}(z) = (sqrt(pi)/2) e^{z^2} erfc(z)
    Complex h1 = asiad::hermite_h({-1.0, 0.0}, {1.0, 0.0});
    double want = 0.5 * std::sqrt(M_PI) * std::exp(1.0) * std::erfc(1.0);
    CHECK(std::abs(h1.real() - want) < 1e-10 * want);
    CHECK(std::abs(h1.imag()) < 1e-14);
}

TEST_CASE("positive integer degrees collapse to the polynomials") {
    const double zs[] = {0.3, -1.2, 2.5};
    for (double z : zs) {
        Complex h2 = asiad::hermite_h({2.0, 0.0}, {z, 0.0});
        Complex h3 = asiad::hermite_h({3.0, 0.0}, {z, 0.0});
        double p2 = 4.0 * z * z - 2.0;
        double p3 = 8.0 * z * z * z - 12.0 * z;
        CHECK(std::abs(h2.real() - p2) <= 5e-14 * std::max(1.0, std::abs(p2)));
        CHECK(std::abs(h3.real() - p3) <= 5e-14 * std::max(1.0, std::abs(p3)));
        CHECK(std::abs(h2.imag()) < 1e-13);
        CHECK(std::abs(h3.imag()) < 1e-13);
    }
}

TEST_CASE("three-term recurrence across regimes") {
    // H_{mu+1}(z) = 2 z H_mu(z) - 2 mu H_{mu-1}(z)
    struct Pt {
        Complex mu, z;
    };
    const Pt pts[] = {
        {{0.7, 0.0}, {0.9, 0.0}},    {{-0.4, 0.0}, {2.0, 0.0}},
        {{1.6, 0.0}, {4.0, 0.0}},    {{-1.7, 0.0}, {-1.1, 0.0}},
        {{0.5, 0.5}, {1.5, -0.5}},   {{2.2, 0.0}, {7.0, 0.0}},
    };
    for (const Pt& p : pts) {
        Complex hm1 = asiad::hermite_h(p.mu - Complex(1.0, 0.0), p.z);
        Complex h0 = asiad::hermite_h(p.mu, p.z);
        Complex hp1 = asiad::hermite_h(p.mu + Complex(1.0, 0.0), p.z);
        Complex rhs = 2.0 * p.z * h0 - 2.0 * p.mu * hm1;
        double scale = std::max({std::abs(hp1), std::abs(2.0 * p.z * h0),
                                 std::abs(2.0 * p.mu * hm1), 1e-30});
        INFO("mu=(", p.mu.real(), ",", p.mu.imag(), ") z=(", p.z.real(), ",",
             p.z.imag(), ")");
        CHECK(std::abs(hp1 - rhs) / scale < 1e-8);
    }
}

TEST_CASE("modified Bessel series against frozen value") {
    Complex i31 = asiad::bessel_i_series({3.0, 0.0}, {1.0, 0.0});
    CHECK(rel(i31, {0.0221684249243319024762857476299, 0.0}) < 1e-14);
    CHECK_THROWS_AS((void)asiad::bessel_i_series({-2.0, 0.0}, {1.0, 0.0}),
                    asiad::BadParameter);
    // I_0(0) = 1, I_rho(0) = 0 for Re rho > 0
    CHECK(asiad::bessel_i_series({0.0, 0.0}, {0.0, 0.0}) ==
          Complex(1.0, 0.0));
    CHECK(asiad::bessel_i_series({1.5, 0.0}, {0.0, 0.0}) ==
          Complex(0.0, 0.0));
}

TEST_CASE("Bessel contour integral matches the series") {
    asiad::ContourSpec c;
    c.theta = 2.8;
    c.radius = 1.2;
    c.truncation = 9.0;
    struct Pt {
        Complex rho, eta;
    };
    const Pt pts[] = {
        {{0.7, 0.0}, {1.3, 0.0}},
        {{2.0, 0.0}, {0.5, 0.0}},
        {{1.2, 0.8}, {2.0, 0.0}},
    };
    for (const Pt& p : pts) {
        Complex ic = asiad::bessel_i_contour(p.rho, p.eta, c);
        Complex is = asiad::bessel_i_series(p.rho, p.eta);
        INFO("rho=(", p.rho.real(), ",", p.rho.imag(), ")");
        CHECK(rel(ic, is) < 1e-8);
    }
}

TEST_CASE("regime selection is visible and sane") {
    auto near0 = asiad::hermite_h_info({-0.5, 0.0}, {1.0, 0.0});
    CHECK(near0.regime == asiad::HermiteRegime::series);
    auto far = asiad::hermite_h_info({-0.5, 0.0}, {9.0, 0.0});
    CHECK(far.regime == asiad::HermiteRegime::asymptotic);
    auto left = asiad::hermite_h_info({-0.9, 0.0}, {-7.0, 0.0});
    CHECK(left.regime == asiad::HermiteRegime::negative_degree_integral);
}
