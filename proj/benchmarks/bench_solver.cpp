#include <benchmark/benchmark.h>

#include "lightsout/generators.hpp"
#include "lightsout/solver.hpp"
#include "lightsout/theorem_check.hpp"

using namespace lightsout;

namespace {

void BM_SolveGridAllOn(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto p = Puzzle::all_off(grid(GridSpec{{k, k}}));
    const auto target = BitVec::ones(k * k);
    for (auto _ : state) benchmark::DoNotOptimize(solve_to_target(p, target));
}
BENCHMARK(BM_SolveGridAllOn)->Arg(5)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_MinimalClicks(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto p = Puzzle::all_off(grid(GridSpec{{k, k}}));
    const auto target = BitVec::ones(k * k);
    for (auto _ : state) benchmark::DoNotOptimize(minimal_clicks(p, target));
}
// 5x5, 4x4 and 19x19 have nullity 2, 4 and 16.
BENCHMARK(BM_MinimalClicks)->Arg(4)->Arg(5)->Arg(19)->Unit(benchmark::kMicrosecond);

void BM_TheoremSweep(benchmark::State& state) {
    SweepOptions opts;
    opts.density_grid = true;
    const auto n_max = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sweep(n_max, 1, RngSpec{1}, opts));
}
BENCHMARK(BM_TheoremSweep)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
