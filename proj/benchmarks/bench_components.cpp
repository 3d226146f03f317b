#include <benchmark/benchmark.h>

#include "kcover/components.hpp"
#include "kcover/generators.hpp"

using namespace kcover;

static void BM_tight_components(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    auto g = random_colouring(n, 3, 0.5, 7);
    for (auto _ : state) benchmark::DoNotOptimize(tight_components(g));
}
BENCHMARK(BM_tight_components)->Arg(10)->Arg(16)->Arg(22);

static void BM_tight_components_bfs(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    auto g = random_colouring(n, 3, 0.5, 7);
    for (auto _ : state) benchmark::DoNotOptimize(tight_components_bfs(g));
}
BENCHMARK(BM_tight_components_bfs)->Arg(10)->Arg(16);

static void BM_bfs_layers(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    auto g = random_colouring(n, 3, 0.5, 7);
    auto l = tight_components(g);
    auto cg = component_graph(g, l);
    for (auto _ : state) benchmark::DoNotOptimize(bfs_layers(cg, 0, 3));
}
BENCHMARK(BM_bfs_layers)->Arg(16)->Arg(22);
