#include <benchmark/benchmark.h>

#include "cdo/character.hpp"
#include "cdo/suite.hpp"

// Serial reference vs OpenMP kernels on the two sweep-shaped workloads:
// character coefficients and the batch lifting solves.

namespace {

using namespace cdo;

void character_serial(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        QSeries s = character_direct_serial(order, nullptr);
        benchmark::DoNotOptimize(s);
    }
}

void character_parallel(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        QSeries s = character_direct(order, nullptr);
        benchmark::DoNotOptimize(s);
    }
}

void solver_sweep_serial(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    for (auto _ : state) check_solver_sweep(w, 0, /*parallel=*/false);
}

void solver_sweep_parallel(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    for (auto _ : state) check_solver_sweep(w, 0, /*parallel=*/true);
}

}  // namespace

BENCHMARK(character_serial)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(character_parallel)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(solver_sweep_serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(solver_sweep_parallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
