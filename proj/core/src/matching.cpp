#include "kcover/matching.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kcover {

VertexSet Matching::covered() const
{
    VertexSet s = 0;
    for (const KEdge& e : edges) s |= e.vertex_set();
    return s;
}

int ConnectedMatchingResult::components_used() const
{
    std::set<int> ids;
    for (const auto& [e, id] : per_edge_component) ids.insert(id);
    return static_cast<int>(ids.size());
}

Matching maximal_matching_in(const ColouredKGraph& g, VertexSet w,
                             const std::function<bool(const KEdge&)>& allowed)
{
    Matching m;
    VertexSet free = w;
    const std::uint64_t total = binom(g.n(), g.k());
    for (std::uint64_t r = 0; r < total; ++r) {
        if (!g.present(r)) continue;
        KEdge e = g.edge_of(r);
        VertexSet ev = e.vertex_set();
        if ((ev & free) != ev) continue;
        if (!allowed(e)) continue;
        m.edges.push_back(e);
        free &= ~ev;
    }
    return m;
}

ConnectedMatchingResult connected_matching(const ColouredKGraph& g, double eta)
{
    if (g.num_edges() == 0) throw invalid_input("connected_matching: graph has no edges");
    const int n = g.n();
    const int k = g.k();

    ConnectedMatchingResult r;
    r.labeling = tight_components(g);
    ComponentGraph cg = component_graph(g, r.labeling);
    r.f_star = *almost_spanning_component(g, r.labeling);
    r.layers = bfs_layers(cg, r.f_star, k);

    std::vector<int> layer_of(r.labeling.num_components(), -1);  // 1-based
    for (int i = 0; i < k; ++i)
        for (int id : r.layers[i]) layer_of[id] = i + 1;

    VertexSet w = vs_full(n);
    std::vector<VertexSet> w_after;  // W_1..W_k
    for (int i = 1; i <= k; ++i) {
        auto allowed = [&](const KEdge& e) {
            return layer_of[r.labeling.component[g.rank_of(e)]] == i;
        };
        Matching mi = maximal_matching_in(g, w, allowed);
        w &= ~mi.covered();
        r.layer_matchings.push_back(std::move(mi));
        w_after.push_back(w);

        // Eq. no_edges: maximality leaves no edge of layers 1..i inside W_i.
        for (std::uint64_t rank : g.present_ranks()) {
            int layer = layer_of[r.labeling.component[rank]];
            VertexSet ev = g.edge_of(rank).vertex_set();
            if (layer >= 1 && layer <= i && (ev & w) == ev)
                throw std::logic_error("connected_matching: no_edges invariant broken");
        }
    }

    r.i_star = k;
    for (int i = 1; i <= k; ++i)
        if (vs_size(w_after[i - 1]) <= eta * n + 1e-9) {
            r.i_star = i;
            break;
        }
    r.leftover = w_after[r.i_star - 1];

    for (int i = 1; i <= r.i_star; ++i)
        for (const KEdge& e : r.layer_matchings[i - 1].edges) {
            r.matching.edges.push_back(e);
            r.per_edge_component[e] = r.labeling.component[g.rank_of(e)];
        }
    std::set<int> used;
    for (const auto& [e, id] : r.per_edge_component) used.insert(id);
    r.colour_counts[Colour::red] = 0;
    r.colour_counts[Colour::blue] = 0;
    for (int id : used) ++r.colour_counts[r.labeling.colour[id]];
    return r;
}

AuditReport audit_result(const ColouredKGraph& g, const ConnectedMatchingResult& r)
{
    AuditReport report;
    const int n = g.n();
    const int k = g.k();
    TightComponentLabeling l = tight_components_bfs(g);  // independent labeling

    report.matching_valid = true;
    VertexSet seen = 0;
    for (const KEdge& e : r.matching.edges) {
        VertexSet ev = e.vertex_set();
        if (!g.present(e)) {
            report.matching_valid = false;
            report.violations.push_back("matching edge not present in host");
        }
        if (ev & seen) {
            report.matching_valid = false;
            report.violations.push_back("matching edges overlap");
        }
        seen |= ev;
        auto it = r.per_edge_component.find(e);
        if (it == r.per_edge_component.end() || it->second != l.component[g.rank_of(e)]) {
            report.matching_valid = false;
            report.violations.push_back("per-edge component id mismatch");
        }
    }

    std::vector<int> layer_of(l.num_components(), -1);
    for (std::size_t i = 0; i < r.layers.size(); ++i)
        for (int id : r.layers[i]) layer_of[id] = static_cast<int>(i) + 1;

    // Single component per round; record leftover size when violated, since
    // the guarantee carries an escape clause for tiny remainders.
    report.layers_single_component = true;
    VertexSet w = vs_full(n);
    for (const Matching& mi : r.layer_matchings) {
        std::set<int> ids;
        for (const KEdge& e : mi.edges) ids.insert(l.component[g.rank_of(e)]);
        if (ids.size() > 1) {
            report.layers_single_component = false;
            report.violations.push_back(
                "round uses " + std::to_string(ids.size()) + " components with |W| = " +
                std::to_string(vs_size(w)));
        }
        w &= ~mi.covered();
    }

    report.no_edges_invariant = true;
    w = vs_full(n);
    for (std::size_t i = 0; i < r.layer_matchings.size(); ++i) {
        w &= ~r.layer_matchings[i].covered();
        bool clean = true;
        for (std::uint64_t rank : g.present_ranks()) {
            int layer = layer_of[l.component[rank]];
            VertexSet ev = g.edge_of(rank).vertex_set();
            if (layer >= 1 && layer <= static_cast<int>(i) + 1 && (ev & w) == ev)
                clean = false;
        }
        if (!clean) {
            report.no_edges_invariant = false;
            report.violations.push_back("an already-layered edge survives in W_" +
                                        std::to_string(i + 1));
        }
    }

    report.within_k_layers = true;
    for (std::uint64_t rank : g.present_ranks())
        if (layer_of[l.component[rank]] < 0) report.within_k_layers = false;
    if (!report.within_k_layers)
        report.violations.push_back("an edge lies beyond component distance " +
                                    std::to_string(k - 1) + " of the root component");

    report.colour_alternation = true;
    if (r.f_star >= 0 && r.f_star < l.num_components()) {
        Colour root = l.colour[r.f_star];
        for (std::size_t i = 0; i < r.layers.size(); ++i)
            for (int id : r.layers[i]) {
                Colour expect = i % 2 == 0 ? root : other(root);
                if (l.colour[id] != expect) {
                    report.colour_alternation = false;
                    report.violations.push_back("layer colour parity broken at layer " +
                                                std::to_string(i + 1));
                }
            }
    } else {
        report.colour_alternation = false;
        report.violations.push_back("root component id out of range");
    }
    return report;
}

}  // namespace kcover
