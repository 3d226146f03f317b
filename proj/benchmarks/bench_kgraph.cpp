#include <benchmark/benchmark.h>

#include "kcover/kgraph.hpp"

using namespace kcover;

static void BM_colex_rank(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int k = 4;
    std::vector<KEdge> edges;
    for (std::uint64_t r = 0; r < binom(n, k); ++r) edges.push_back(colex_unrank(r, n, k));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(colex_rank(edges[i], n, k));
        i = (i + 1) % edges.size();
    }
}
BENCHMARK(BM_colex_rank)->Arg(12)->Arg(20)->Arg(24);

static void BM_colex_unrank(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int k = 4;
    const std::uint64_t total = binom(n, k);
    std::uint64_t r = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(colex_unrank(r, n, k));
        r = (r + 1) % total;
    }
}
BENCHMARK(BM_colex_unrank)->Arg(12)->Arg(20)->Arg(24);

static void BM_degree(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    auto g = ColouredKGraph::monochromatic(n, 4, Colour::red);
    VertexSet s = vs_of({0, 1});
    for (auto _ : state) benchmark::DoNotOptimize(degree(g, s));
}
BENCHMARK(BM_degree)->Arg(12)->Arg(20);

BENCHMARK_MAIN();
