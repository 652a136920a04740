#ifndef CHIVAR_PLANTED_HPP
#define CHIVAR_PLANTED_HPP

#include <cstdint>

#include "chivar/graph.hpp"

namespace chivar {

// G(n, p) conditioned to carry a uniform independent a-set: pick U uniform
// among a-subsets, forbid edges inside U, draw the rest independently.
struct PlantedSample {
    Graph graph;
    VertexSet planted;
};

PlantedSample sample_planted(int n, int a, double p, std::uint64_t seed);

// Extend g by a planted independent a-set: place g on a uniform m-subset of
// [m+a] (order preserving), leave the remaining a vertices mutually
// non-adjacent, draw cross pairs independently with probability p.  The
// output has the planted law on m+a vertices conditioned on the non-planted
// part equalling g; in particular chi(output) <= chi(g) + 1.
Graph grow_by_planting(const Graph& g, int a, double p, std::uint64_t seed);

} // namespace chivar

#endif
