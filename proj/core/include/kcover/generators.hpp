#ifndef KCOVER_GENERATORS_HPP
#define KCOVER_GENERATORS_HPP

#include <cstdint>

#include "kcover/kgraph.hpp"
#include "kcover/walks.hpp"

namespace kcover {

// splitmix64: fixed portable generator so fixtures reproduce anywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    double next_unit();                    // uniform in [0, 1)
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// Complete k-graph, each edge red independently with probability p_red.
ColouredKGraph random_colouring(int n, int k, double p_red, std::uint64_t seed);

// Complete k-graph over parts V_1..V_l by index ranges (sizes differing by
// at most one); an edge is blue iff some part holds a strict majority of it.
ColouredKGraph partition_adversary(int n, int k, int l);

// Deletes each edge independently with probability eps, then zeroes out any
// i-set whose degree fell strictly between 0 and the (1 - 2 eps) threshold,
// until the (1-2eps, 2eps)-density test passes. Throws invalid_input after
// the retry limit (DensificationFailed).
ColouredKGraph sparsify(const ColouredKGraph& g, double eps, std::uint64_t seed);

// Random tight pseudo-walk of m steps, closed via a bridge when the last
// edge does not already wrap onto the first (adding at most 2k edges).
// Throws invalid_input when closing fails (CannotClose).
TightPseudoWalk random_closed_walk(const ColouredKGraph& g, int m, std::uint64_t seed);

}  // namespace kcover

#endif
