#ifndef KCOVER_COMPONENTS_HPP
#define KCOVER_COMPONENTS_HPP

#include <optional>
#include <vector>

#include "kcover/kgraph.hpp"

namespace kcover {

// Disjoint-set forest with union by size and path compression.
class UnionFind {
public:
    explicit UnionFind(std::size_t n);
    std::size_t find(std::size_t x);
    void unite(std::size_t x, std::size_t y);
    bool connected(std::size_t x, std::size_t y) { return find(x) == find(y); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

// Partition of present edges into monochromatic tight components. Component
// ids are dense in [0, #components), ordered by smallest member edge rank.
struct TightComponentLabeling {
    int n = 0;
    int k = 0;
    std::vector<int> component;          // indexed by colex rank; -1 for absent
    std::vector<Colour> colour;          // per component id
    std::vector<VertexSet> span;         // per component id
    std::vector<std::uint64_t> size;     // per component id, edge count

    int num_components() const { return static_cast<int>(colour.size()); }
};

// Shell sweep: for each (k-1)-set and each colour, all same-coloured present
// superset edges are united. Avoids the pairwise O(|E|^2) intersection test.
TightComponentLabeling tight_components(const ColouredKGraph& g);

// Independent oracle: BFS over the relation |e cap e'| >= k-1 within a colour
// class. Same id convention as tight_components.
TightComponentLabeling tight_components_bfs(const ColouredKGraph& g);

VertexSet spanned_vertices(const TightComponentLabeling& l, int component);

// Graph on component ids; F1F2 is an edge iff colours differ and some
// e1 in F1, e2 in F2 have |e1 cap e2| = k-1.
struct ComponentGraph {
    std::vector<Colour> colour;
    std::vector<std::vector<int>> adjacency;  // sorted, unique

    int num_components() const { return static_cast<int>(colour.size()); }
};

ComponentGraph component_graph(const ColouredKGraph& g, const TightComponentLabeling& l);

// Layers G_1..G_depth: G_1 = {root}, G_i = components at distance i-1.
std::vector<std::vector<int>> bfs_layers(const ComponentGraph& cg, int root, int depth);

// A monochromatic vertex-component of a 2-coloured 2-graph.
struct MonoComponent {
    int order = 0;
    Colour colour = Colour::red;
    VertexSet vertices = 0;
};

// Largest monochromatic component of a 2-coloured 2-graph, by order.
// Isolated vertices count as singleton components of either colour.
MonoComponent largest_mono_component_2graph(const ColouredKGraph& f);

// Component id maximizing |spanned_vertices|; ties broken by smallest id.
// nullopt when the graph has no edges.
std::optional<int> almost_spanning_component(const ColouredKGraph& g,
                                             const TightComponentLabeling& l);

}  // namespace kcover

#endif
