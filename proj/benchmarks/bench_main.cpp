#include <benchmark/benchmark.h>

#include "zq2/ladder.hpp"
#include "zq2/quadrature.hpp"
#include "zq2/zeta.hpp"

namespace {

void BM_RiemannSiegel(benchmark::State& state) {
    const double t = double(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(zq2::z_riemann_siegel(t, 2).z);
}
BENCHMARK(BM_RiemannSiegel)->Arg(1000)->Arg(10000)->Arg(100000)->Arg(1000000);

void BM_EulerMaclaurin(benchmark::State& state) {
    const double t = double(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(zq2::z_euler_maclaurin(t, 1e-9).z);
}
BENCHMARK(BM_EulerMaclaurin)->Arg(100)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_Theta(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(zq2::theta(12345.6789));
}
BENCHMARK(BM_Theta);

void BM_IntegrateZSquaredUnit(benchmark::State& state) {
    const double a = double(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(zq2::integrate_z_squared(a, a + 1.0, 1e-9));
}
BENCHMARK(BM_IntegrateZSquaredUnit)->Arg(1000)->Arg(10000)->Arg(100000);

const zq2::LadderTable& bench_table() {
    static const zq2::LadderTable t = zq2::LadderTable::build(2000.0, 0.25, 0.0);
    return t;
}

void BM_Phi1OffGrid(benchmark::State& state) {
    const zq2::LadderTable& t = bench_table();
    for (auto _ : state) benchmark::DoNotOptimize(t.phi1(1500.1234));
}
BENCHMARK(BM_Phi1OffGrid);

void BM_Phi1Inverse(benchmark::State& state) {
    const zq2::LadderTable& t = bench_table();
    const double y = t.phi1(1500.0);
    for (auto _ : state) benchmark::DoNotOptimize(t.phi1_inverse(y));
}
BENCHMARK(BM_Phi1Inverse);

}  // namespace

BENCHMARK_MAIN();
