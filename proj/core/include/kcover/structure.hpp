#ifndef KCOVER_STRUCTURE_HPP
#define KCOVER_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "kcover/components.hpp"
#include "kcover/plane.hpp"
#include "kcover/walks.hpp"

namespace kcover {

// A pair of opposite-coloured edges on the two arcs of a closed walk that
// share a tight component. Positions are 1-based into the walk.
struct CrossingWitness {
    int a = 0;          // position in {2 .. i-1}
    int b = 0;          // position in {i+1 .. m}
    int component = 0;  // shared tight component id
};

// Scans all opposite-coloured position pairs (a, b) over the two arcs of Q
// and returns the lexicographically first pair whose edges share a tight
// component. Requires e_1 and e_i to both have colour c and lie in different
// c-coloured components (throws precondition_violation otherwise). nullopt
// means no witness; possible only outside the density guarantee regime.
std::optional<CrossingWitness> find_crossing_witness(const ColouredKGraph& g,
                                                     const TightComponentLabeling& l,
                                                     const TightPseudoWalk& q, int i,
                                                     Colour c);

// Induction on the number s of c-coloured edges strictly inside the first
// arc: s = 0 triangulates Q and extracts the crossing from the dual walk of
// the bichromatic edges; s >= 1 splices in the blue walk found for a rotated
// sub-instance, strictly decreasing s, and recurses.
struct ConstructiveStep {
    TightPseudoWalk walk;  // the instance walk at this depth
    int i = 0;             // endpoint position
    int s = 0;             // c-coloured edges in {2 .. i-1}
    bool case_a = false;   // whether this step resolved via triangulation
};

struct ConstructiveResult {
    std::optional<CrossingWitness> witness;
    std::vector<ConstructiveStep> trace;
    std::string failure;  // non-empty on ConstructionFailed and similar
};

ConstructiveResult constructive_crossing_witness(const ColouredKGraph& g,
                                                 const TightPseudoWalk& q, int i,
                                                 Colour c);

// One qualifying instance of the lemma: a closed walk plus the endpoint
// position (the endpoint colour is the colour of the walk's first edge).
struct LemmaInstance {
    TightPseudoWalk walk;
    int i = 0;
};

struct LemmaReport {
    std::uint64_t walks_enumerated = 0;
    std::uint64_t instances_checked = 0;
    std::uint64_t witnesses_found = 0;
    std::vector<LemmaInstance> counterexamples;  // capped
    std::vector<LemmaInstance> samples;          // deterministic subsample
};

// Enumerates closed tight pseudo-walks of length at most max_len by DFS over
// the edge-adjacency relation, filters instances meeting the lemma's
// precondition, and runs find_crossing_witness on each. Guard: C(n,k) <= 300
// (throws invalid_input beyond that). sample_cap instances are retained in
// the report for downstream spot checks.
LemmaReport verify_lemma_exhaustive(const ColouredKGraph& g, int max_len,
                                    int sample_cap = 0);

}  // namespace kcover

#endif
