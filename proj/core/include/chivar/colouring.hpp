#ifndef CHIVAR_COLOURING_HPP
#define CHIVAR_COLOURING_HPP

#include <cstdint>
#include <vector>

#include "chivar/graph.hpp"

namespace chivar {

struct SolveBudget {
    double seconds = 60.0; // wall clock per instance
};

struct ColouringCertificate {
    std::vector<std::vector<int>> classes;
    int k() const { return static_cast<int>(classes.size()); }
    std::size_t max_size() const;
};

// Classes partition V(g), every class independent, and (when size_cap > 0)
// no class exceeds size_cap.
bool verify_colouring(const Graph& g, const ColouringCertificate& cert, int size_cap = 0);

struct ChiResult {
    int lower = 0;
    int upper = 0;
    bool exact = false; // lower == upper and search completed
    ColouringCertificate certificate; // witnesses the upper bound
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
    int value() const; // throws if !exact
};

// Exact chromatic number: DSATUR branch and bound with a greedy clique for
// the lower bound and precolouring.  On timeout returns the certified
// bounds with exact = false.
ChiResult chromatic_number(const Graph& g, SolveBudget budget = {});

// Exact t-bounded chromatic number: colour classes close once they reach
// size t.  chi_t >= max(chi, ceil(n/t)).
ChiResult bounded_chromatic_number(const Graph& g, int t, SolveBudget budget = {});

// Greedy DSATUR upper bound (also used to seed the search).
ColouringCertificate greedy_colouring(const Graph& g, int size_cap = 0);

// Greedy clique, a chromatic lower bound.
std::vector<int> greedy_clique(const Graph& g);

} // namespace chivar

#endif
