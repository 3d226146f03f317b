#include "kcover/walks.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace kcover {

bool validate_walk(const ColouredKGraph& g, const TightPseudoWalk& w)
{
    if (w.edges.empty()) return false;
    for (const KEdge& e : w.edges) {
        if (e.size() != g.k()) return false;
        if (!g.present(e)) return false;
    }
    for (std::size_t i = 0; i + 1 < w.edges.size(); ++i)
        if (intersection_size(w.edges[i], w.edges[i + 1]) < g.k() - 1) return false;
    if (w.closed && intersection_size(w.edges.front(), w.edges.back()) < g.k() - 1)
        return false;
    return true;
}

std::optional<TightPseudoWalk> bridge(const ColouredKGraph& g, VertexSet w,
                                      const KEdge& e1, const KEdge& e2)
{
    const int k = g.k();
    if (e1.size() != k || e2.size() != k) throw invalid_input("bridge: wrong uniformity");
    if ((e1.vertex_set() & ~w) != 0 || (e2.vertex_set() & ~w) != 0)
        throw precondition_violation("bridge: edges must lie inside W");
    if (!g.present(e1) || !g.present(e2))
        throw precondition_violation("bridge: edges must be present");

    const std::vector<int>& x = e1.v;
    const std::vector<int>& y = e2.v;
    std::vector<int> z;
    std::vector<KEdge> forward, backward;
    for (int i = 1; i <= k - 1; ++i) {
        // s1 = z_1..z_{i-1} x_i..x_{k-1}, s2 = z_1..z_{i-1} y_i..y_{k-1}
        std::vector<int> s1(z.begin(), z.end()), s2(z.begin(), z.end());
        for (int j = i; j <= k - 1; ++j) {
            s1.push_back(x[j - 1]);
            s2.push_back(y[j - 1]);
        }
        VertexSet sv1 = vs_of(s1), sv2 = vs_of(s2);
        int chosen = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (!vs_contains(w, v) || vs_contains(sv1, v) || vs_contains(sv2, v)) continue;
            std::vector<int> f1 = s1, f2 = s2;
            f1.push_back(v);
            f2.push_back(v);
            if (g.present(KEdge(std::move(f1))) && g.present(KEdge(std::move(f2)))) {
                chosen = v;
                break;
            }
        }
        if (chosen < 0) return std::nullopt;
        z.push_back(chosen);
        std::vector<int> f1 = s1, f2 = s2;
        f1.push_back(chosen);
        f2.push_back(chosen);
        forward.emplace_back(std::move(f1));
        backward.emplace_back(std::move(f2));
    }
    TightPseudoWalk out;
    out.edges.push_back(e1);
    for (auto& f : forward) out.edges.push_back(std::move(f));
    for (auto it = backward.rbegin(); it != backward.rend(); ++it)
        out.edges.push_back(std::move(*it));
    out.edges.push_back(e2);
    out.closed = false;
    return out;
}

std::vector<KEdge> adjacent_edges(const ColouredKGraph& g, const KEdge& e)
{
    std::vector<KEdge> out;
    const int k = g.k();
    for (int drop = 0; drop < k; ++drop) {
        for (int v = 0; v < g.n(); ++v) {
            if (e.contains(v)) continue;
            std::vector<int> f;
            f.reserve(k);
            for (int i = 0; i < k; ++i)
                if (i != drop) f.push_back(e.v[i]);
            f.push_back(v);
            KEdge cand(std::move(f));
            if (g.present(cand)) out.push_back(std::move(cand));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<int> shortest_pseudo_walk(const ColouredKGraph& g, const KEdge& e1,
                                        const KEdge& e2,
                                        std::optional<Colour> same_colour_only)
{
    if (!g.present(e1) || !g.present(e2))
        throw precondition_violation("shortest_pseudo_walk: edges must be present");
    auto allowed = [&](const KEdge& e) {
        return !same_colour_only || g.colour(e) == *same_colour_only;
    };
    if (!allowed(e1) || !allowed(e2)) return std::nullopt;
    if (e1 == e2) return 1;
    std::map<KEdge, int> dist;
    std::queue<KEdge> q;
    dist[e1] = 1;
    q.push(e1);
    while (!q.empty()) {
        KEdge cur = q.front();
        q.pop();
        int d = dist[cur];
        for (KEdge& next : adjacent_edges(g, cur)) {
            if (!allowed(next) || dist.count(next)) continue;
            if (next == e2) return d + 1;
            dist[next] = d + 1;
            q.push(std::move(next));
        }
    }
    return std::nullopt;
}

TightPseudoWalk concatenate(const TightPseudoWalk& p, const TightPseudoWalk& q)
{
    if (p.edges.empty() || q.edges.empty())
        throw invalid_input("concatenate: empty walk");
    const int k = p.edges.front().size();
    if (intersection_size(p.edges.back(), q.edges.front()) < k - 1)
        throw precondition_violation("concatenate: junction intersection too small");
    TightPseudoWalk out;
    out.edges = p.edges;
    out.edges.insert(out.edges.end(), q.edges.begin(), q.edges.end());
    out.closed = intersection_size(p.edges.front(), q.edges.back()) >= k - 1;
    return out;
}

}  // namespace kcover
