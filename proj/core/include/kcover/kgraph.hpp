#ifndef KCOVER_KGRAPH_HPP
#define KCOVER_KGRAPH_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcover {

// All verification is desk scale: vertex sets fit in one machine word.
inline constexpr int max_vertices = 64;

// binom(n, k), 0 outside the triangle. Table-backed, valid for n <= 64.
std::uint64_t binom(int n, int k);

struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct precondition_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Colour : std::uint8_t { red = 0, blue = 1 };

inline Colour other(Colour c) { return c == Colour::red ? Colour::blue : Colour::red; }
inline char colour_char(Colour c) { return c == Colour::red ? 'R' : 'B'; }
const char* colour_name(Colour c);

enum class Cell : std::uint8_t { absent = 0, red = 1, blue = 2 };

inline Cell cell_of(Colour c) { return c == Colour::red ? Cell::red : Cell::blue; }
inline Colour colour_of_cell(Cell c)
{
    if (c == Cell::absent) throw invalid_input("absent edge has no colour");
    return c == Cell::red ? Colour::red : Colour::blue;
}

// Bitmask over [0, n).
using VertexSet = std::uint64_t;

inline bool vs_contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet vs_with(VertexSet s, int v) { return s | (VertexSet{1} << v); }
inline VertexSet vs_without(VertexSet s, int v) { return s & ~(VertexSet{1} << v); }
inline int vs_size(VertexSet s) { return __builtin_popcountll(s); }
inline VertexSet vs_full(int n) { return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }
std::vector<int> vs_vertices(VertexSet s);
VertexSet vs_of(const std::vector<int>& vs);

// A k-edge: strictly increasing vertex indices in [0, n).
struct KEdge {
    std::vector<int> v;

    KEdge() = default;
    explicit KEdge(std::vector<int> vertices);  // sorts and validates

    int size() const { return static_cast<int>(v.size()); }
    VertexSet vertex_set() const { return vs_of(v); }
    bool contains(int x) const;
    std::string to_string() const;

    friend bool operator==(const KEdge&, const KEdge&) = default;
    friend auto operator<=>(const KEdge&, const KEdge&) = default;
};

// |a cap b| for edges given as sorted vertex lists.
int intersection_size(const KEdge& a, const KEdge& b);

// Position of edge in colexicographic order of all k-subsets of [0, n).
std::uint64_t colex_rank(const KEdge& edge, int n, int k);
KEdge colex_unrank(std::uint64_t index, int n, int k);

// A 2-edge-coloured k-graph on n vertices, colex-indexed. Immutable after
// construction; all member functions are const and safe for concurrent reads.
class ColouredKGraph {
public:
    ColouredKGraph(int n, int k, std::vector<Cell> table);

    static ColouredKGraph monochromatic(int n, int k, Colour c);
    static ColouredKGraph empty(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    std::uint64_t num_cells() const { return table_.size(); }

    Cell cell(std::uint64_t rank) const;
    Cell cell(const KEdge& e) const { return cell(rank_of(e)); }
    bool present(std::uint64_t rank) const { return cell(rank) != Cell::absent; }
    bool present(const KEdge& e) const { return present(rank_of(e)); }
    Colour colour(std::uint64_t rank) const { return colour_of_cell(cell(rank)); }
    Colour colour(const KEdge& e) const { return colour(rank_of(e)); }

    std::uint64_t rank_of(const KEdge& e) const { return colex_rank(e, n_, k_); }
    KEdge edge_of(std::uint64_t rank) const { return colex_unrank(rank, n_, k_); }

    bool is_complete() const;
    std::uint64_t num_edges() const;
    std::vector<std::uint64_t> present_ranks() const;

    // Induced subgraph on W; indices preserved, edges outside W become absent.
    ColouredKGraph restrict(VertexSet w) const;

    // Red/blue involution.
    ColouredKGraph swapped() const;

private:
    int n_;
    int k_;
    std::vector<Cell> table_;
};

// N_H(S): all (k-|S|)-sets S' disjoint from S with S u S' present. |S| <= k-1.
std::vector<KEdge> neighbourhood(const ColouredKGraph& g, VertexSet s);
std::uint64_t degree(const ColouredKGraph& g, VertexSet s);

// (mu, alpha)-density. Degree thresholds are normalised by the maximum
// possible degree binom(n-i, k-i), so a complete graph is (1, 0)-dense.
bool is_dense(const ColouredKGraph& g, double mu, double alpha);

// Enumerates all t-subsets of pool, ascending, in colex order.
void for_each_subset(const std::vector<int>& pool, int t,
                     const std::function<void(const std::vector<int>&)>& fn);

// Text colouring format: first line "n k [complete-red-default]"; then one
// line "v1 ... vk C" per listed edge with C in {R,B}.
ColouredKGraph read_colouring(std::istream& in);
void write_colouring(std::ostream& out, const ColouredKGraph& g);

}  // namespace kcover

#endif
