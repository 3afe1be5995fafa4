#include <benchmark/benchmark.h>

#include "majconf/analytic.hpp"
#include "majconf/numeric.hpp"
#include "majconf/validate.hpp"

using namespace majconf;

static void BM_HermiteCoeffs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hermite_coeffs(n));
}
BENCHMARK(BM_HermiteCoeffs)->Arg(6)->Arg(20)->Arg(50);

static void BM_MakeMode(benchmark::State& state) {
    const PotentialParams p(1.0, 2.0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(make_mode(p, n));
}
BENCHMARK(BM_MakeMode)->Arg(0)->Arg(6);

static void BM_CoupledResidual(benchmark::State& state) {
    const PotentialParams p(0.0, 1.0);
    const Mode mode = make_mode(p, 3);
    const SpinorField field = sample_mode(mode, default_grid(p));
    for (auto _ : state) benchmark::DoNotOptimize(residual_coupled(field, mode.energy, p));
}
BENCHMARK(BM_CoupledResidual);

static void BM_RunAll(benchmark::State& state) {
    const PotentialParams p(0.0, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(run_all(p));
}
BENCHMARK(BM_RunAll)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
