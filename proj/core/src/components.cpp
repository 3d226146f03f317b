#include "kcover/components.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace kcover {

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1)
{
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x)
{
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
        std::size_t next = parent_[x];
        parent_[x] = root;
        x = next;
    }
    return root;
}

void UnionFind::unite(std::size_t x, std::size_t y)
{
    std::size_t a = find(x), b = find(y);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
}

namespace {

// Densifies root labels into component ids ordered by smallest edge rank and
// fills the derived per-component data.
TightComponentLabeling finish_labeling(const ColouredKGraph& g,
                                       const std::function<std::uint64_t(std::uint64_t)>& root_of)
{
    TightComponentLabeling l;
    l.n = g.n();
    l.k = g.k();
    l.component.assign(g.num_cells(), -1);
    std::map<std::uint64_t, int> id_of_root;
    for (std::uint64_t r = 0; r < g.num_cells(); ++r) {
        if (!g.present(r)) continue;
        std::uint64_t root = root_of(r);
        auto [it, fresh] = id_of_root.try_emplace(root, static_cast<int>(l.colour.size()));
        if (fresh) {
            l.colour.push_back(g.colour(r));
            l.span.push_back(0);
            l.size.push_back(0);
        }
        int id = it->second;
        l.component[r] = id;
        l.span[id] |= g.edge_of(r).vertex_set();
        l.size[id] += 1;
    }
    return l;
}

}  // namespace

TightComponentLabeling tight_components(const ColouredKGraph& g)
{
    const int n = g.n();
    const int k = g.k();
    UnionFind uf(g.num_cells());
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    // For each (k-1)-shell, unite same-coloured superset edges per colour.
    for_each_subset(all, k - 1, [&](const std::vector<int>& shell) {
        VertexSet sv = vs_of(shell);
        std::int64_t prev[2] = {-1, -1};
        for (int v = 0; v < n; ++v) {
            if (vs_contains(sv, v)) continue;
            std::vector<int> ev = shell;
            ev.push_back(v);
            std::uint64_t r = colex_rank(KEdge(std::move(ev)), n, k);
            Cell c = g.cell(r);
            if (c == Cell::absent) continue;
            int ci = c == Cell::red ? 0 : 1;
            if (prev[ci] >= 0) uf.unite(static_cast<std::uint64_t>(prev[ci]), r);
            prev[ci] = static_cast<std::int64_t>(r);
        }
    });
    return finish_labeling(g, [&](std::uint64_t r) { return uf.find(r); });
}

TightComponentLabeling tight_components_bfs(const ColouredKGraph& g)
{
    std::vector<std::uint64_t> ranks = g.present_ranks();
    std::vector<KEdge> edges;
    edges.reserve(ranks.size());
    for (auto r : ranks) edges.push_back(g.edge_of(r));
    std::vector<std::int64_t> root(g.num_cells(), -1);
    for (std::size_t s = 0; s < ranks.size(); ++s) {
        if (root[ranks[s]] >= 0) continue;
        std::queue<std::size_t> q;
        q.push(s);
        root[ranks[s]] = static_cast<std::int64_t>(ranks[s]);
        while (!q.empty()) {
            std::size_t cur = q.front();
            q.pop();
            for (std::size_t t = 0; t < ranks.size(); ++t) {
                if (root[ranks[t]] >= 0) continue;
                if (g.colour(ranks[t]) != g.colour(ranks[s])) continue;
                if (intersection_size(edges[cur], edges[t]) >= g.k() - 1) {
                    root[ranks[t]] = static_cast<std::int64_t>(ranks[s]);
                    q.push(t);
                }
            }
        }
    }
    return finish_labeling(g, [&](std::uint64_t r) {
        return static_cast<std::uint64_t>(root[r]);
    });
}

VertexSet spanned_vertices(const TightComponentLabeling& l, int component)
{
    if (component < 0 || component >= l.num_components())
        throw invalid_input("unknown component id");
    return l.span[component];
}

ComponentGraph component_graph(const ColouredKGraph& g, const TightComponentLabeling& l)
{
    ComponentGraph cg;
    cg.colour = l.colour;
    cg.adjacency.assign(l.num_components(), {});
    const int n = g.n();
    const int k = g.k();
    std::set<std::pair<int, int>> seen;
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    // Two distinct edges over a common (k-1)-shell intersect in exactly k-1
    // vertices, and every pair with |e1 cap e2| = k-1 arises this way.
    for_each_subset(all, k - 1, [&](const std::vector<int>& shell) {
        VertexSet sv = vs_of(shell);
        std::vector<int> reds, blues;
        for (int v = 0; v < n; ++v) {
            if (vs_contains(sv, v)) continue;
            std::vector<int> ev = shell;
            ev.push_back(v);
            std::uint64_t r = colex_rank(KEdge(std::move(ev)), n, k);
            Cell c = g.cell(r);
            if (c == Cell::red)
                reds.push_back(l.component[r]);
            else if (c == Cell::blue)
                blues.push_back(l.component[r]);
        }
        for (int a : reds)
            for (int b : blues)
                if (seen.emplace(a, b).second) {
                    cg.adjacency[a].push_back(b);
                    cg.adjacency[b].push_back(a);
                }
    });
    for (auto& adj : cg.adjacency) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    return cg;
}

std::vector<std::vector<int>> bfs_layers(const ComponentGraph& cg, int root, int depth)
{
    if (root < 0 || root >= cg.num_components()) throw invalid_input("bad bfs root");
    std::vector<std::vector<int>> layers(depth);
    std::vector<int> dist(cg.num_components(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
        int c = q.front();
        q.pop();
        if (dist[c] < depth) layers[dist[c]].push_back(c);
        for (int d : cg.adjacency[c]) {
            if (dist[d] < 0) {
                dist[d] = dist[c] + 1;
                q.push(d);
            }
        }
    }
    for (auto& layer : layers) std::sort(layer.begin(), layer.end());
    return layers;
}

MonoComponent largest_mono_component_2graph(const ColouredKGraph& f)
{
    if (f.k() != 2) throw invalid_input("largest_mono_component_2graph needs a 2-graph");
    MonoComponent best;
    if (f.num_edges() == 0) return best;
    for (Colour c : {Colour::red, Colour::blue}) {
        UnionFind uf(f.n());
        for (std::uint64_t r = 0; r < f.num_cells(); ++r) {
            if (f.cell(r) != cell_of(c)) continue;
            KEdge e = f.edge_of(r);
            uf.unite(e.v[0], e.v[1]);
        }
        std::map<std::size_t, VertexSet> members;
        for (int v = 0; v < f.n(); ++v) members[uf.find(v)] = vs_with(members[uf.find(v)], v);
        for (auto& [root, verts] : members) {
            int order = vs_size(verts);
            if (order > best.order) best = MonoComponent{order, c, verts};
        }
    }
    return best;
}

std::optional<int> almost_spanning_component(const ColouredKGraph&,
                                             const TightComponentLabeling& l)
{
    if (l.num_components() == 0) return std::nullopt;
    int best = 0;
    for (int c = 1; c < l.num_components(); ++c)
        if (vs_size(l.span[c]) > vs_size(l.span[best])) best = c;
    return best;
}

}  // namespace kcover
