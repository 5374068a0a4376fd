#include "asiad/contour.hpp"

#include <cmath>

#include "asiad/errors.hpp"

namespace asiad {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;
} // namespace

void ContourSpec::validate() const {
    if (!(theta >= kHalfPi - 1e-12 && theta <= kPi + 1e-12))
        throw InvalidContour("theta must lie in [pi/2, pi], got " +
                             std::to_string(theta));
    if (!(radius >= 1.0))
        throw InvalidContour("radius must be >= 1, got " +
                             std::to_string(radius));
    if (!(truncation > std::log(radius)))
        throw InvalidContour("truncation must exceed ln(radius)");
    if (nodes < 1) throw InvalidContour("nodes must be >= 1");
}

std::array<ContourSegment, 3> parameterize(const ContourSpec& c) {
    c.validate();
    const double lr = std::log(c.radius);
    const double T = c.truncation;
    return {ContourSegment{{T, -c.theta}, {lr, -c.theta}},
            ContourSegment{{lr, -c.theta}, {lr, c.theta}},
            ContourSegment{{lr, c.theta}, {T, c.theta}}};
}

ContourIntegral integrate(const std::function<Complex(Complex)>& f,
                          const ContourSpec& c, const QuadratureConfig& q,
                          Orientation o) {
    auto segs = parameterize(c);
    QuadratureConfig qc = q;
    qc.initial_panels = std::max(q.initial_panels, c.nodes);

    ContourIntegral out;
    const Complex inv_2pii{0.0, -1.0 / (2.0 * kPi)}; // 1/(2 pi i)
    for (int k = 0; k < 3; ++k) {
        const Complex a = segs[k].start, b = segs[k].end;
        const Complex d = b - a;
        auto g = [&](double p) { return f(a + p * d); };
        ComplexIntegralResult r = integrate(g, 0.0, 1.0, qc);
        out.segments[k] = inv_2pii * d * r.value;
        out.abs_error_estimate += std::abs(d) * r.abs_error / (2.0 * kPi);
        out.l1 += std::abs(d) * r.l1 / (2.0 * kPi);
        out.evals += r.evals;
    }
    out.value = out.segments[0] + out.segments[1] + out.segments[2];
    out.oscillatory = c.theta < kHalfPi + 0.05;

    // the ray cutoffs must sit in negligible territory
    double fcut = std::max(std::abs(f(segs[0].start)), std::abs(f(segs[2].end)));
    double scale = std::max(2.0 * kPi * std::abs(out.value), out.l1);
    double tail_tol =
        q.tail_factor * std::max(q.abs_tol, q.rel_tol * std::max(scale, 1.0));
    if (fcut > tail_tol)
        throw TailNotNegligible(
            "contour integrand at the ray cutoff is " + std::to_string(fcut) +
            ", above the tail tolerance " + std::to_string(tail_tol) +
            "; increase truncation");

    if (o == Orientation::reversed) {
        out.value = -out.value;
        for (auto& s : out.segments) s = -s;
    }
    return out;
}

double auto_truncation(double t, double coupling, const ContourSpec& c,
                       double tol) {
    if (!(t > 0.0)) throw BadParameter("auto_truncation: t must be > 0");
    if (!(tol > 0.0)) throw BadParameter("auto_truncation: tol must be > 0");
    // solve exp(-(T^2 - theta^2)/(2t) + coupling T) = tol for the largest root:
    // T^2 - 2 t coupling T - (theta^2 + 2 t ln(1/tol)) = 0
    const double ct = coupling * t;
    const double L = c.theta * c.theta + 2.0 * t * std::log(1.0 / tol);
    double T = ct + std::sqrt(ct * ct + std::max(L, 0.0));
    return std::max(T, std::log(c.radius) + 1.0);
}

} // namespace asiad
