#ifndef CHIVAR_MIS_HPP
#define CHIVAR_MIS_HPP

#include <cstdint>
#include <vector>

#include "chivar/colouring.hpp"
#include "chivar/graph.hpp"

namespace chivar {

struct MisResult {
    int lower = 0;            // size of the best independent set found
    int upper = 0;            // certified upper bound
    bool exact = false;
    VertexSet witness;
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
    int value() const; // throws if !exact
};

// Exact maximum independent set via branch and bound with a greedy
// clique-cover bound.
MisResult independence_number(const Graph& g, SolveBudget budget = {});

// Exact count of independent a-sets.  Guarded to n <= 64, a <= 10.
std::int64_t count_independent_sets(const Graph& g, int a);

struct PackingResult {
    int size = 0;
    bool exact = false; // greedy mode yields a certified lower bound only
    std::vector<VertexSet> sets;
};

// Largest collection of pairwise disjoint independent a-sets.  Exact mode
// runs set-packing branch and bound over all independent a-sets (same size
// guard as count_independent_sets); greedy mode returns a maximal packing.
PackingResult max_disjoint_a_sets(const Graph& g, int a, bool exact_mode = true);

} // namespace chivar

#endif
