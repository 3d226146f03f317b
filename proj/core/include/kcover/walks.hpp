#ifndef KCOVER_WALKS_HPP
#define KCOVER_WALKS_HPP

#include <optional>
#include <vector>

#include "kcover/kgraph.hpp"

namespace kcover {

// Edge sequence with |e_i cap e_{i+1}| >= k-1; if closed, also between the
// last and first edge. Repeated edges are permitted. Length = edge count.
struct TightPseudoWalk {
    std::vector<KEdge> edges;
    bool closed = false;

    int length() const { return static_cast<int>(edges.size()); }
};

bool validate_walk(const ColouredKGraph& g, const TightPseudoWalk& w);

// Length-2k pseudo-walk e1 f_1..f_{k-1} f'_{k-1}..f'_1 e2 inside G[W]. Each
// z_i is the smallest admissible vertex. nullopt when some step has an empty
// choice set (possible outside the dense-graph guarantee regime).
std::optional<TightPseudoWalk> bridge(const ColouredKGraph& g, VertexSet w,
                                      const KEdge& e1, const KEdge& e2);

// BFS oracle over the edge-adjacency relation |e cap e'| >= k-1, optionally
// restricted to one colour class. Returns the minimum walk length (e1 = e2
// gives 1), or nullopt when unreachable.
std::optional<int> shortest_pseudo_walk(const ColouredKGraph& g, const KEdge& e1,
                                        const KEdge& e2,
                                        std::optional<Colour> same_colour_only = {});

// Joins P and P', keeping both junction edges; closes the result when the
// wrap-around intersection also holds. Throws on a too-small junction.
TightPseudoWalk concatenate(const TightPseudoWalk& p, const TightPseudoWalk& q);

// Present edges adjacent to e (excluding e itself).
std::vector<KEdge> adjacent_edges(const ColouredKGraph& g, const KEdge& e);

}  // namespace kcover

#endif
