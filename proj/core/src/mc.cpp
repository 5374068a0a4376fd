#include "asiad/mc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "asiad/density.hpp"
#include "asiad/errors.hpp"

namespace asiad {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// Philox4x32-10: ten rounds of the multiply-xor permutation with the Weyl
// key schedule. One block of four 32-bit words per (seed, path, block).
struct Block {
    std::uint32_t v[4];
};

Block philox_block(std::uint64_t seed, std::uint64_t path,
                   std::uint32_t block) {
    std::uint32_t k0 = static_cast<std::uint32_t>(seed);
    std::uint32_t k1 = static_cast<std::uint32_t>(seed >> 32);
    std::uint32_t c0 = static_cast<std::uint32_t>(path);
    std::uint32_t c1 = static_cast<std::uint32_t>(path >> 32);
    std::uint32_t c2 = block;
    std::uint32_t c3 = 0;
    for (int round = 0; round < 10; ++round) {
        std::uint64_t p0 = std::uint64_t{0xD2511F53u} * c0;
        std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * c2;
        std::uint32_t n0 = static_cast<std::uint32_t>(p1 >> 32) ^ c1 ^ k0;
        std::uint32_t n1 = static_cast<std::uint32_t>(p1);
        std::uint32_t n2 = static_cast<std::uint32_t>(p0 >> 32) ^ c3 ^ k1;
        std::uint32_t n3 = static_cast<std::uint32_t>(p0);
        c0 = n0;
        c1 = n1;
        c2 = n2;
        c3 = n3;
        k0 += 0x9E3779B9u;
        k1 += 0xBB67AE85u;
    }
    return {{c0, c1, c2, c3}};
}

double to_open_unit(std::uint32_t hi, std::uint32_t lo) {
    std::uint64_t u = (std::uint64_t{hi} << 32) | lo;
    // 53 random bits, offset to the open interval (0,1)
    return static_cast<double>(u >> 11) * 0x1p-53 + 0x1p-54;
}

// Box-Muller pair from one block
void normal_pair(std::uint64_t seed, std::uint64_t path, std::uint32_t block,
                 double* z) {
    Block b = philox_block(seed, path, block);
    double ua = to_open_unit(b.v[0], b.v[1]);
    double ub = to_open_unit(b.v[2], b.v[3]);
    double r = std::sqrt(-2.0 * std::log(ua));
    z[0] = r * std::cos(kTwoPi * ub);
    z[1] = r * std::sin(kTwoPi * ub);
}

double one_path(const MCConfig& cfg, std::uint64_t path) {
    double dt = cfg.t / cfg.steps;
    double sdt = std::sqrt(dt);
    double drift = 2.0 * cfg.nu * dt;
    double b2 = 0.0; // 2 nu s + 2 B_s
    double f_prev = 1.0;
    double acc = 0.0;
    double z[2];
    for (int j = 0; j < cfg.steps; ++j) {
        if (j % 2 == 0)
            normal_pair(cfg.seed, path, static_cast<std::uint32_t>(j / 2), z);
        b2 += drift + 2.0 * sdt * z[j % 2];
        double f = std::exp(b2);
        acc += f_prev + f;
        f_prev = f;
    }
    return 0.5 * dt * acc;
}

} // namespace

double counter_normal(std::uint64_t seed, std::uint64_t path,
                      std::uint64_t k) {
    double z[2];
    normal_pair(seed, path, static_cast<std::uint32_t>(k / 2), z);
    return z[k % 2];
}

std::vector<double> simulate(const MCConfig& cfg, int threads) {
    cfg.validate();
    if (threads <= 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<double> out(static_cast<size_t>(cfg.paths));
    auto worker = [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t i = lo; i < hi; ++i)
            out[static_cast<size_t>(i)] =
                one_path(cfg, static_cast<std::uint64_t>(i));
    };
    if (threads == 1 || cfg.paths < 2 * threads) {
        worker(0, cfg.paths);
        return out;
    }
    std::vector<std::thread> pool;
    std::int64_t chunk = (cfg.paths + threads - 1) / threads;
    for (int k = 0; k < threads; ++k) {
        std::int64_t lo = k * chunk;
        std::int64_t hi = std::min<std::int64_t>(lo + chunk, cfg.paths);
        if (lo >= hi) break;
        pool.emplace_back(worker, lo, hi);
    }
    for (std::thread& th : pool) th.join();
    return out;
}

double DensityCdf::operator()(double x) const {
    if (w.empty()) return 0.0;
    if (x <= w.front()) return 0.0;
    if (x >= w.back()) return cdf.back();
    size_t j = static_cast<size_t>(
        std::upper_bound(w.begin(), w.end(), x) - w.begin());
    double frac = (x - w[j - 1]) / (w[j] - w[j - 1]);
    return cdf[j - 1] + frac * (cdf[j] - cdf[j - 1]);
}

DensityCdf build_density_cdf(double nu, double eps, double t, int knots,
                             const QuadratureConfig& q) {
    if (knots < 16) throw BadParameter("build_density_cdf: knots < 16");
    // center and spread of ln A_t, mapped through the eps power; generous
    // so the lost tails stay under the normalization guard
    double center = eps * (std::log(t) + 2.0 * nu * t);
    double half = std::abs(eps) * (9.0 * std::sqrt(t) + 3.0);
    DensityCdf out;
    out.w.resize(static_cast<size_t>(knots));
    out.cdf.resize(static_cast<size_t>(knots));
    std::vector<double> dens(static_cast<size_t>(knots));
    for (int i = 0; i < knots; ++i) {
        double g = center - half + 2.0 * half * i / (knots - 1);
        out.w[static_cast<size_t>(i)] = std::exp(g);
        ModelParams p{nu, eps, t, out.w[static_cast<size_t>(i)]};
        dens[static_cast<size_t>(i)] = density(p, q).value;
    }
    double acc = 0.0;
    out.cdf[0] = 0.0;
    for (int i = 1; i < knots; ++i) {
        size_t s = static_cast<size_t>(i);
        acc += 0.5 * (out.w[s] - out.w[s - 1]) * (dens[s] + dens[s - 1]);
        out.cdf[s] = acc;
    }
    return out;
}

MCReport ks_compare(const std::vector<double>& samples, const ModelParams& p,
                    const std::function<double(double)>& density_cdf) {
    auto t0 = std::chrono::steady_clock::now();
    if (samples.empty()) throw BadParameter("ks_compare: no samples");
    // the CDF must have exhausted the mass; probe far out relative to the
    // largest transformed sample
    std::vector<double> x(samples.size());
    for (size_t i = 0; i < samples.size(); ++i)
        x[i] = std::pow(samples[i], p.eps);
    std::sort(x.begin(), x.end());
    double f_end = density_cdf(x.back() * 1e6);
    if (std::abs(f_end - 1.0) > 1e-3)
        throw CdfNotNormalized("ks_compare: cdf reaches " +
                               std::to_string(f_end) + " instead of 1");

    double n = static_cast<double>(x.size());
    double d = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        double f = density_cdf(x[i]);
        d = std::max(d, std::max(f - static_cast<double>(i) / n,
                                 static_cast<double>(i + 1) / n - f));
    }
    double mean = 0.0;
    for (double a : samples) mean += a;
    mean /= static_cast<double>(samples.size());
    double var = 0.0;
    for (double a : samples) var += (a - mean) * (a - mean);
    var /= std::max(1.0, static_cast<double>(samples.size() - 1));

    MCReport rep;
    rep.ks_stat = d;
    rep.mean = mean;
    rep.mean_ci_halfwidth =
        3.0 * std::sqrt(var / static_cast<double>(samples.size()));
    rep.n_effective = static_cast<std::int64_t>(samples.size());
    rep.elapsed = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

RichardsonReport richardson_bias_check(
    const MCConfig& cfg, const std::function<double(double)>& density_cdf) {
    RichardsonReport rep;
    rep.steps = {1024, 2048, 4096};
    ModelParams p{cfg.nu, cfg.eps, cfg.t, 1.0};
    for (int s : rep.steps) {
        MCConfig c = cfg;
        c.steps = s;
        std::vector<double> a = simulate(c);
        rep.ks.push_back(ks_compare(a, p, density_cdf).ks_stat);
    }
    rep.noise_allowance = 2.0 / std::sqrt(static_cast<double>(cfg.paths));
    rep.nonincreasing_within_noise = true;
    for (size_t i = 1; i < rep.ks.size(); ++i)
        if (rep.ks[i] > rep.ks[i - 1] + rep.noise_allowance)
            rep.nonincreasing_within_noise = false;
    return rep;
}

} // namespace asiad
