#ifndef KCOVER_MATCHING_HPP
#define KCOVER_MATCHING_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kcover/components.hpp"

namespace kcover {

// Pairwise vertex-disjoint present edges.
struct Matching {
    std::vector<KEdge> edges;

    VertexSet covered() const;
};

struct ConnectedMatchingResult {
    Matching matching;
    std::map<KEdge, int> per_edge_component;
    std::vector<std::vector<int>> layers;    // component ids, layer 1..k
    std::vector<Matching> layer_matchings;   // M_1..M_k (possibly empty)
    int i_star = 0;                          // 1-based; rounds actually used
    VertexSet leftover = 0;                  // W_{i*}
    std::map<Colour, int> colour_counts;     // components used, by colour
    TightComponentLabeling labeling;
    int f_star = -1;                         // root component id

    int components_used() const;
};

// Greedy maximal matching over allowed edges inside W, scanning in colex
// order. Maximality: no allowed edge survives inside W minus the cover.
Matching maximal_matching_in(const ColouredKGraph& g, VertexSet w,
                             const std::function<bool(const KEdge&)>& allowed);

// Layered matching through the component-graph neighbourhood of the widest
// spanning component: round i matches greedily inside the leftover vertices
// using edges of layer-i components, stopping at the first round whose
// leftover is at most eta * n. Throws invalid_input on an edgeless graph.
ConnectedMatchingResult connected_matching(const ColouredKGraph& g, double eta = 0.0);

struct AuditReport {
    bool matching_valid = false;
    bool layers_single_component = false;  // each round draws from one component
    bool no_edges_invariant = false;       // H[W_i] avoids layers 1..i each round
    bool within_k_layers = false;          // every present edge in some layer <= k
    bool colour_alternation = false;       // layer parity matches root colour
    std::vector<std::string> violations;

    bool all_passed() const
    {
        return matching_valid && layers_single_component && no_edges_invariant &&
               within_k_layers && colour_alternation;
    }
};

// Independent re-verification of a connected_matching result. Violations are
// reported, never thrown; on sparse inputs the report doubles as a
// diagnostic for which guarantees degraded.
AuditReport audit_result(const ColouredKGraph& g, const ConnectedMatchingResult& r);

}  // namespace kcover

#endif
