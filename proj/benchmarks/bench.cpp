#include <benchmark/benchmark.h>

#include "asiad/density.hpp"
#include "asiad/laplace.hpp"
#include "asiad/mc.hpp"
#include "asiad/specialfn.hpp"

using asiad::ModelParams;

namespace {

void BM_KernelThetaPi(benchmark::State& state) {
    double t = double(state.range(0)) / 100.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            asiad::hw_kernel(t, 0.8, asiad::Variant::theta_pi));
}
BENCHMARK(BM_KernelThetaPi)->Arg(25)->Arg(100)->Arg(200);

void BM_KernelThetaHalf(benchmark::State& state) {
    double t = double(state.range(0)) / 100.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            asiad::hw_kernel(t, 0.8, asiad::Variant::theta_half));
}
BENCHMARK(BM_KernelThetaHalf)->Arg(25)->Arg(100);

void BM_DensityHermite(benchmark::State& state) {
    ModelParams p{0.5, 1.0, double(state.range(0)) / 100.0, 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(asiad::density_hermite(p));
}
BENCHMARK(BM_DensityHermite)->Arg(25)->Arg(100)->Arg(200);

void BM_DensityYor(benchmark::State& state) {
    ModelParams p{0.5, 1.0, double(state.range(0)) / 100.0, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(asiad::density_yor(p));
}
BENCHMARK(BM_DensityYor)->Arg(25)->Arg(100)->Arg(200);

void BM_DensityYorNegIntegerDrift(benchmark::State& state) {
    ModelParams p{-2.0, 1.0, 1.0, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(asiad::density_yor(p));
}
BENCHMARK(BM_DensityYorNegIntegerDrift);

void BM_HermiteH(benchmark::State& state) {
    asiad::Complex mu{-1.5, 0.0};
    asiad::Complex z{double(state.range(0)), 0.0};
    for (auto _ : state) benchmark::DoNotOptimize(asiad::hermite_h(mu, z));
}
BENCHMARK(BM_HermiteH)->Arg(1)->Arg(8)->Arg(-7);

void BM_LaplaceRhs(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            asiad::laplace_rhs({5.0, 0.0}, 0.5, 1.0, 1.0));
}
BENCHMARK(BM_LaplaceRhs);

void BM_SimulatePaths(benchmark::State& state) {
    asiad::MCConfig cfg;
    cfg.paths = state.range(0);
    cfg.steps = 256;
    for (auto _ : state) benchmark::DoNotOptimize(asiad::simulate(cfg));
    state.SetItemsProcessed(state.iterations() * cfg.paths * cfg.steps);
}
BENCHMARK(BM_SimulatePaths)->Arg(1000)->Arg(10000);

} // namespace

BENCHMARK_MAIN();
