#ifndef CHIVAR_GNP_HPP
#define CHIVAR_GNP_HPP

#include <cstdint>

#include "chivar/graph.hpp"

namespace chivar {

// Colex index of the unordered pair {u, v}, u < v: C(v,2) + u.
// Edge bits are drawn per pair index, so the sample is independent of
// traversal order and thread count.
constexpr std::uint64_t pair_index(std::uint64_t u, std::uint64_t v) {
    return v * (v - 1) / 2 + u;
}

// G(n, p) with every pair present independently with probability p.
Graph sample_gnp(int n, double p, std::uint64_t seed);

} // namespace chivar

#endif
