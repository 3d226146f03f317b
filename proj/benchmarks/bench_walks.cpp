#include <benchmark/benchmark.h>

#include "kcover/generators.hpp"
#include "kcover/walks.hpp"

using namespace kcover;

static void BM_bridge(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    auto g = ColouredKGraph::monochromatic(n, 3, Colour::red);
    VertexSet w = vs_full(n);
    KEdge e1({0, 1, 2});
    KEdge e2({n - 3, n - 2, n - 1});
    for (auto _ : state) benchmark::DoNotOptimize(bridge(g, w, e1, e2));
}
BENCHMARK(BM_bridge)->Arg(10)->Arg(16)->Arg(22);

static void BM_shortest_pseudo_walk(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    auto g = ColouredKGraph::monochromatic(n, 3, Colour::red);
    KEdge e1({0, 1, 2});
    KEdge e2({n - 3, n - 2, n - 1});
    for (auto _ : state) benchmark::DoNotOptimize(shortest_pseudo_walk(g, e1, e2));
}
BENCHMARK(BM_shortest_pseudo_walk)->Arg(10)->Arg(16);
