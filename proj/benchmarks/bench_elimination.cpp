#include <benchmark/benchmark.h>

#include "lightsout/elimination.hpp"
#include "lightsout/theorem_check.hpp"

using namespace lightsout;

namespace {

Gf2Matrix bench_matrix(std::size_t n) { return random_symmetric(n, RngSpec{n, {1, 2}, {1, 2}}); }

BitVec random_vector(std::size_t n, CounterRng& rng) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng.next() & 1) v.set(i);
    return v;
}

void BM_Rref(benchmark::State& state) {
    const auto a = bench_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rref(a));
}
BENCHMARK(BM_Rref)->RangeMultiplier(4)->Range(16, 2048)->Unit(benchmark::kMicrosecond);

void BM_SolveDiagonal(benchmark::State& state) {
    const auto a = bench_matrix(static_cast<std::size_t>(state.range(0)));
    const auto d = diagonal(a);
    for (auto _ : state) benchmark::DoNotOptimize(solve(a, d));
}
BENCHMARK(BM_SolveDiagonal)->RangeMultiplier(4)->Range(16, 2048)->Unit(benchmark::kMicrosecond);

void BM_CachedSolverSolve(benchmark::State& state) {
    const auto a = bench_matrix(static_cast<std::size_t>(state.range(0)));
    const Gf2Solver solver(a);
    const auto d = diagonal(a);
    for (auto _ : state) benchmark::DoNotOptimize(solver.solve(d));
}
BENCHMARK(BM_CachedSolverSolve)->RangeMultiplier(4)->Range(16, 2048)->Unit(benchmark::kMicrosecond);

void BM_MatVecWide(benchmark::State& state) {
    const auto cols = static_cast<std::size_t>(state.range(0));
    CounterRng rng(11);
    std::vector<BitVec> rows;
    for (int r = 0; r < 256; ++r) rows.push_back(random_vector(cols, rng));
    const Gf2Matrix a(cols, std::move(rows));
    const auto v = random_vector(cols, rng);
    for (auto _ : state) benchmark::DoNotOptimize(mat_vec(a, v));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * 256 * static_cast<std::int64_t>(cols / 8));
}
BENCHMARK(BM_MatVecWide)->Arg(1 << 14)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace
