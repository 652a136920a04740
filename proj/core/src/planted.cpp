#include "chivar/planted.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "chivar/errors.hpp"
#include "chivar/gnp.hpp"
#include "chivar/rng.hpp"

namespace chivar {

namespace {

// Unbiased uniform draw from [0, range) by rejection; advances the counter.
std::uint64_t bounded_draw(std::uint64_t seed, std::uint64_t& counter, std::uint64_t range) {
    const std::uint64_t limit = range * (~std::uint64_t{0} / range);
    while (true) {
        std::uint64_t r = stream_at(seed, counter++);
        if (r < limit) return r % range;
    }
}

// Uniform a-subset of [0, n) via a partial Fisher-Yates shuffle.
VertexSet uniform_subset(int n, int a, std::uint64_t seed) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t counter = 0;
    for (int i = 0; i < a; ++i) {
        auto j = static_cast<std::size_t>(i) +
                 bounded_draw(seed, counter, static_cast<std::uint64_t>(n - i));
        std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
    }
    VertexSet u(static_cast<std::size_t>(n));
    for (int i = 0; i < a; ++i) u.set(static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]));
    return u;
}

} // namespace

PlantedSample sample_planted(int n, int a, double p, std::uint64_t seed) {
    if (n < 1 || n > kMaxGraphOrder) throw SizeError("sample_planted: n out of range");
    if (a < 1 || a > n) throw SizeError("sample_planted: a must satisfy 1 <= a <= n");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("sample_planted: p must be in [0,1]");

    VertexSet u = uniform_subset(n, a, derive_seed(seed, 1));
    std::uint64_t edge_seed = derive_seed(seed, 2);
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        for (int w = 0; w < v; ++w) {
            if (u.test(static_cast<std::size_t>(v)) && u.test(static_cast<std::size_t>(w)))
                continue;
            if (uniform_at(edge_seed, pair_index(static_cast<std::uint64_t>(w),
                                                 static_cast<std::uint64_t>(v))) < p)
                g.add_edge(w, v);
        }
    }
    return {std::move(g), std::move(u)};
}

Graph grow_by_planting(const Graph& g, int a, double p, std::uint64_t seed) {
    const int m = g.order();
    const int n = m + a;
    if (a < 1 || n > kMaxGraphOrder) throw SizeError("grow_by_planting: output order out of range");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("grow_by_planting: p must be in [0,1]");

    VertexSet u = uniform_subset(n, a, derive_seed(seed, 1));
    std::uint64_t edge_seed = derive_seed(seed, 2);

    // order-preserving embedding of g onto the complement of U
    std::vector<int> host;
    host.reserve(static_cast<std::size_t>(m));
    for (int v = 0; v < n; ++v)
        if (!u.test(static_cast<std::size_t>(v))) host.push_back(v);

    Graph out(n);
    for (int i = 0; i < m; ++i) {
        const VertexSet& nb = g.neighbours(i);
        for (int j = nb.next(static_cast<std::size_t>(i)); j >= 0;
             j = nb.next(static_cast<std::size_t>(j)))
            out.add_edge(host[static_cast<std::size_t>(i)], host[static_cast<std::size_t>(j)]);
    }
    // cross pairs only: inside U stays empty, inside the host set is g's
    for (int v = u.first(); v >= 0; v = u.next(static_cast<std::size_t>(v))) {
        for (int w = 0; w < n; ++w) {
            if (u.test(static_cast<std::size_t>(w))) continue;
            auto lo = static_cast<std::uint64_t>(std::min(v, w));
            auto hi = static_cast<std::uint64_t>(std::max(v, w));
            if (uniform_at(edge_seed, pair_index(lo, hi)) < p)
                out.add_edge(v, w);
        }
    }
    return out;
}

} // namespace chivar
