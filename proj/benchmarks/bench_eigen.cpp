#include <benchmark/benchmark.h>

#include "majconf/numeric.hpp"
#include "majconf/tridiagonal.hpp"

using namespace majconf;

// Lowest 8 levels of the finite-difference operator; state.range(0) grid points.
static void BM_FdEigenvalues(benchmark::State& state) {
    const PotentialParams p(1.0, 1.0);
    const Grid grid = centered_grid(p, 10.0, static_cast<std::size_t>(state.range(0)));
    const TridiagonalSym a = build_fd_hamiltonian(p, grid);
    for (auto _ : state) benchmark::DoNotOptimize(eigen_lowest_k(a, 8, 1e-12, 1));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FdEigenvalues)->RangeMultiplier(2)->Range(1001, 16001)->Complexity();

static void BM_FdEigenvaluesThreads(benchmark::State& state) {
    const PotentialParams p(0.0, 1.0);
    const TridiagonalSym a = build_fd_hamiltonian(p, default_grid(p));
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eigen_lowest_k(a, 8, 1e-12, threads));
}
BENCHMARK(BM_FdEigenvaluesThreads)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

static void BM_SturmCount(benchmark::State& state) {
    const PotentialParams p(0.0, 1.0);
    const TridiagonalSym a = build_fd_hamiltonian(p, default_grid(p));
    for (auto _ : state) benchmark::DoNotOptimize(sturm_count(a, 7.5));
}
BENCHMARK(BM_SturmCount);

// Level n by shooting to a 1e-13 bracket.
static void BM_Shooting(benchmark::State& state) {
    const PotentialParams p(0.0, 1.0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(find_eigen_shooting(p, n, 1e-13));
}
BENCHMARK(BM_Shooting)->DenseRange(0, 6, 3);
