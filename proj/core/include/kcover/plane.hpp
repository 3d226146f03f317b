#ifndef KCOVER_PLANE_HPP
#define KCOVER_PLANE_HPP

#include <optional>
#include <string>
#include <vector>

#include "kcover/kgraph.hpp"
#include "kcover/walks.hpp"

namespace kcover {

// Combinatorial plane graph: faces given as consistently oriented boundary
// walks (every directed edge appears exactly once across all faces). The
// rotation system is recovered from the faces by finalize().
struct PlaneGraph {
    int num_vertices = 0;
    std::vector<std::vector<int>> faces;
    int outer = -1;

    // Derived by finalize().
    std::vector<std::vector<int>> rotation;
    std::vector<std::vector<int>> adjacency;

    // Rebuilds rotation/adjacency and checks embedding consistency: each
    // directed edge once, a single rotation orbit per vertex, connectivity,
    // and Euler's formula V - E + F = 2. Returns false with a reason on
    // failure.
    bool finalize(std::string* error = nullptr);

    int num_edges() const;
    bool has_edge(int u, int v) const;
};

// Nearly triangulated plane graph with a vertex -> hypergraph-edge map phi
// whose outer cycle realizes a closed tight pseudo-walk.
struct Triangulation {
    PlaneGraph plane;
    std::vector<KEdge> phi;        // per plane vertex
    std::vector<int> outer_cycle;  // plane vertices in walk order
    int case_b_splits = 0;         // recursion count, for diagnostics
};

// Triangulates a closed tight pseudo-walk. Walks of length at most
// max(threshold, 4k+2) use the concentric-grid construction; longer walks
// are split with a length-2k bridge and the halves glued along the shared
// path. nullopt = ConstructionFailed (a choice set was empty).
std::optional<Triangulation> triangulate(const ColouredKGraph& g, const TightPseudoWalk& q,
                                         int threshold = 64);

bool validate_triangulation(const Triangulation& t, const ColouredKGraph& g,
                            const TightPseudoWalk& q, std::string* error = nullptr);

struct HexResult {
    int i_star = 0;               // 1-based outer position; x_{i*} blue, x_{i*+1} red
    std::vector<int> red_walk;    // plane vertices, x_1 .. x_{i*+1}
    std::vector<int> blue_walk;   // plane vertices, x_2 .. x_{i*}
};

// Hex-style monochromatic walk extraction: traces the unique cycle through
// the outer face in the dual subgraph of bichromatic edges. Requires
// col[x_1] = red and col[x_2] = blue; throws precondition_violation
// otherwise. The plane graph must be finalized.
HexResult hex_walk(const PlaneGraph& d, const std::vector<int>& outer_cycle,
                   const std::vector<Colour>& col);

}  // namespace kcover

#endif
