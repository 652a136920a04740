#include <benchmark/benchmark.h>

#include "chivar/asymptotics.hpp"
#include "chivar/colouring.hpp"
#include "chivar/gnp.hpp"
#include "chivar/lagrange.hpp"
#include "chivar/mis.hpp"
#include "chivar/params.hpp"
#include "chivar/rng.hpp"
#include "chivar/threshold.hpp"

namespace {

void BM_ChromaticNumber(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        chivar::Graph g = chivar::sample_gnp(n, 0.5, chivar::derive_seed(17, seed++));
        benchmark::DoNotOptimize(chivar::chromatic_number(g).value());
    }
}
BENCHMARK(BM_ChromaticNumber)->Arg(30)->Arg(45)->Arg(59)->Unit(benchmark::kMillisecond);

void BM_IndependenceNumber(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        chivar::Graph g = chivar::sample_gnp(n, 0.5, chivar::derive_seed(23, seed++));
        benchmark::DoNotOptimize(chivar::independence_number(g).value());
    }
}
BENCHMARK(BM_IndependenceNumber)->Arg(40)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_CountIndependentSets(benchmark::State& state) {
    chivar::Graph g = chivar::sample_gnp(45, 0.5, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(chivar::count_independent_sets(g, 7));
}
BENCHMARK(BM_CountIndependentSets);

void BM_SolveLagrange(benchmark::State& state) {
    const int t = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(chivar::solve_lagrange(t - 2.0, t).y);
}
BENCHMARK(BM_SolveLagrange)->Arg(40)->Arg(400);

void BM_SolveKStar(benchmark::State& state) {
    chivar::ModelParams m(0.5);
    const double n = 1e6;
    auto beta = chivar::default_beta(n, m);
    for (auto _ : state)
        benchmark::DoNotOptimize(chivar::solve_k_star(n, beta, m).k_star);
}
BENCHMARK(BM_SolveKStar);

void BM_SampleGnp(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(chivar::sample_gnp(64, 0.5, seed++).edge_count());
}
BENCHMARK(BM_SampleGnp);

} // namespace

BENCHMARK_MAIN();
