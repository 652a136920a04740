#include "chivar/partition_count.hpp"

#include <stdexcept>
#include <vector>

#include "chivar/errors.hpp"

namespace chivar {

namespace {

// Restricted-growth enumeration: vertex v joins one of the classes opened so
// far or opens the next one, so every partition appears exactly once.
struct Counter {
    const Graph& g;
    int n, k, t;
    std::vector<VertexSet> classes;
    std::vector<int> sizes;
    std::int64_t total = 0;

    Counter(const Graph& gr, int kk, int tt)
        : g(gr), n(gr.order()), k(kk), t(tt) {}

    void place(int v, int open) {
        if (open > k) return;
        if (open + (n - v) < k) return; // cannot open enough new classes
        if (v == n) {
            if (open == k) ++total;
            return;
        }
        for (int c = 0; c < open; ++c) {
            if (sizes[static_cast<std::size_t>(c)] >= t) continue;
            if (g.neighbours(v).intersects(classes[static_cast<std::size_t>(c)])) continue;
            classes[static_cast<std::size_t>(c)].set(static_cast<std::size_t>(v));
            ++sizes[static_cast<std::size_t>(c)];
            place(v + 1, open);
            --sizes[static_cast<std::size_t>(c)];
            classes[static_cast<std::size_t>(c)].reset(static_cast<std::size_t>(v));
        }
        if (open < k) {
            classes[static_cast<std::size_t>(open)].set(static_cast<std::size_t>(v));
            sizes[static_cast<std::size_t>(open)] = 1;
            place(v + 1, open + 1);
            sizes[static_cast<std::size_t>(open)] = 0;
            classes[static_cast<std::size_t>(open)].reset(static_cast<std::size_t>(v));
        }
    }
};

} // namespace

std::int64_t brute_force_count_colourings(const Graph& g, int k, int t) {
    if (k < 1 || t < 1)
        throw std::domain_error("brute_force_count_colourings: k, t must be >= 1");
    if (g.order() > 10)
        throw SizeError("brute_force_count_colourings: n capped at 10");
    if (g.order() == 0) return k == 0 ? 1 : 0;
    Counter counter(g, k, t);
    counter.classes.assign(static_cast<std::size_t>(k), VertexSet(static_cast<std::size_t>(g.order())));
    counter.sizes.assign(static_cast<std::size_t>(k), 0);
    counter.place(0, 0);
    return counter.total;
}

} // namespace chivar
