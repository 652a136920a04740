#include "chivar/gnp.hpp"

#include <stdexcept>

#include "chivar/rng.hpp"

namespace chivar {

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::domain_error("sample_gnp: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("sample_gnp: p must be in [0,1]");
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (uniform_at(seed, pair_index(static_cast<std::uint64_t>(u),
                                            static_cast<std::uint64_t>(v))) < p)
                g.add_edge(u, v);
    return g;
}

} // namespace chivar
