#include <benchmark/benchmark.h>

#include "kcover/generators.hpp"
#include "kcover/matching.hpp"

using namespace kcover;

static void BM_connected_matching(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    auto g = random_colouring(n, 3, 0.5, 11);
    for (auto _ : state) benchmark::DoNotOptimize(connected_matching(g));
}
BENCHMARK(BM_connected_matching)->Arg(12)->Arg(18)->Arg(24);

static void BM_audit_result(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    auto g = random_colouring(n, 3, 0.5, 11);
    auto r = connected_matching(g);
    for (auto _ : state) benchmark::DoNotOptimize(audit_result(g, r));
}
BENCHMARK(BM_audit_result)->Arg(12)->Arg(18);
