#ifndef CHIVAR_TEST_SUPPORT_HPP
#define CHIVAR_TEST_SUPPORT_HPP

#include <cstdint>

#include "chivar/graph.hpp"
#include "chivar/rng.hpp"

namespace chivar::test {

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) g.add_edge(u, v);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph petersen_graph() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);     // outer cycle
        g.add_edge(v, v + 5);           // spokes
        g.add_edge(v + 5, (v + 2) % 5 + 5); // inner pentagram
    }
    return g;
}

// deterministic pseudo-random helpers for test point sampling
struct TestRng {
    std::uint64_t seed;
    std::uint64_t counter = 0;
    explicit TestRng(std::uint64_t s) : seed(s) {}
    double uniform() { return uniform_at(seed, counter++); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) { // inclusive
        return lo + static_cast<int>(uniform() * (hi - lo + 1));
    }
};

} // namespace chivar::test

#endif
