#ifndef CHIVAR_PARTITION_COUNT_HPP
#define CHIVAR_PARTITION_COUNT_HPP

#include <cstdint>

#include "chivar/graph.hpp"

namespace chivar {

// Exact number of partitions of V(g) into exactly k independent classes,
// each of size at most t (unordered t-bounded k-colourings).  n <= 10.
std::int64_t brute_force_count_colourings(const Graph& g, int k, int t);

} // namespace chivar

#endif
