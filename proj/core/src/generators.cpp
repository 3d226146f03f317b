#include "kcover/generators.hpp"

#include <algorithm>
#include <vector>

namespace kcover {

std::uint64_t SplitMix64::next()
{
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit()
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound)
{
    // Rejection sampling for an unbiased result.
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

ColouredKGraph random_colouring(int n, int k, double p_red, std::uint64_t seed)
{
    if (p_red < 0.0 || p_red > 1.0) throw invalid_input("p_red out of range");
    SplitMix64 rng(seed);
    const std::uint64_t total = binom(n, k);
    std::vector<Cell> table(total);
    for (std::uint64_t r = 0; r < total; ++r)
        table[r] = rng.next_unit() < p_red ? Cell::red : Cell::blue;
    return ColouredKGraph(n, k, std::move(table));
}

ColouredKGraph partition_adversary(int n, int k, int l)
{
    if (l < 1) throw invalid_input("partition_adversary: need l >= 1");
    // Part of vertex v: contiguous index ranges, first n mod l parts larger.
    std::vector<int> part(n);
    {
        int v = 0;
        const int base = n / l, extra = n % l;
        for (int p = 0; p < l; ++p) {
            int size = base + (p < extra ? 1 : 0);
            for (int t = 0; t < size && v < n; ++t) part[v++] = p;
        }
    }
    const std::uint64_t total = binom(n, k);
    std::vector<Cell> table(total);
    for (std::uint64_t r = 0; r < total; ++r) {
        KEdge e = colex_unrank(r, n, k);
        std::vector<int> count(l, 0);
        bool blue = false;
        for (int v : e.v)
            if (2 * ++count[part[v]] > k) blue = true;
        table[r] = blue ? Cell::blue : Cell::red;
    }
    return ColouredKGraph(n, k, std::move(table));
}

ColouredKGraph sparsify(const ColouredKGraph& g, double eps, std::uint64_t seed)
{
    if (eps < 0.0 || eps >= 1.0) throw invalid_input("sparsify: need 0 <= eps < 1");
    if (eps == 0.0) return g;
    const int n = g.n();
    const int k = g.k();
    SplitMix64 rng(seed);
    const std::uint64_t total = binom(n, k);
    const double mu = 1.0 - 2.0 * eps;
    const double alpha = 2.0 * eps;
    const int retry_limit = 200;
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;

    for (int attempt = 0; attempt < retry_limit; ++attempt) {
        // Fresh random deletion pass for every attempt.
        std::vector<Cell> table(total);
        for (std::uint64_t r = 0; r < total; ++r) {
            Cell c = g.cell(r);
            table[r] = (c != Cell::absent && rng.next_unit() < eps) ? Cell::absent : c;
        }
        // Cleanup: repeatedly clear every i-set whose degree is positive but
        // below threshold, restoring the all-or-nothing shape of the density
        // condition, until a fixed point is reached.
        for (;;) {
            ColouredKGraph cur(n, k, table);
            if (is_dense(cur, mu, alpha)) return cur;
            bool changed = false;
            for (int i = 1; i <= k - 1; ++i) {
                const double threshold = mu * binom(n - i, k - i);
                for_each_subset(all, i, [&](const std::vector<int>& s) {
                    std::uint64_t d = degree(cur, vs_of(s));
                    if (d == 0 || static_cast<double>(d) + 1e-9 >= threshold) return;
                    std::vector<int> rest;
                    for (int v = 0; v < n; ++v)
                        if (std::find(s.begin(), s.end(), v) == s.end()) rest.push_back(v);
                    for_each_subset(rest, k - i, [&](const std::vector<int>& t) {
                        std::vector<int> ev = s;
                        ev.insert(ev.end(), t.begin(), t.end());
                        std::sort(ev.begin(), ev.end());
                        std::uint64_t r = colex_rank(KEdge(ev), n, k);
                        if (table[r] != Cell::absent) {
                            table[r] = Cell::absent;
                            changed = true;
                        }
                    });
                });
            }
            if (!changed) break;  // stalled; try a fresh deletion pass
        }
    }
    throw invalid_input("sparsify: densification failed after retry limit");
}

TightPseudoWalk random_closed_walk(const ColouredKGraph& g, int m, std::uint64_t seed)
{
    if (m < 1) throw invalid_input("random_closed_walk: need m >= 1");
    if (g.num_edges() == 0) throw invalid_input("random_closed_walk: graph has no edges");
    SplitMix64 rng(seed);

    std::vector<std::uint64_t> ranks = g.present_ranks();
    TightPseudoWalk w;
    w.edges.push_back(g.edge_of(ranks[rng.next_below(ranks.size())]));
    for (int t = 1; t < m; ++t) {
        std::vector<KEdge> nbrs = adjacent_edges(g, w.edges.back());
        nbrs.push_back(w.edges.back());  // a walk may stall on an edge
        w.edges.push_back(nbrs[rng.next_below(nbrs.size())]);
    }
    if (intersection_size(w.edges.back(), w.edges.front()) >= g.k() - 1) {
        w.closed = true;
        return w;
    }
    auto b = bridge(g, vs_full(g.n()), w.edges.back(), w.edges.front());
    if (!b) throw invalid_input("random_closed_walk: cannot close the walk");
    // Bridge interior: e_last f_1 .. f_{2k-2} e_first.
    w.edges.insert(w.edges.end(), b->edges.begin() + 1, b->edges.end() - 1);
    w.closed = true;
    return w;
}

}  // namespace kcover
