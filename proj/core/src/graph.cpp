#include "chivar/graph.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "chivar/errors.hpp"

namespace chivar {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxGraphOrder)
        throw SizeError("graph order must be in [0, " + std::to_string(kMaxGraphOrder) +
                        "], got " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("edge endpoint out of range");
    if (has_edge(u, v)) return;
    adj_[u].set(static_cast<std::size_t>(v));
    adj_[v].set(static_cast<std::size_t>(u));
    ++edges_;
}

bool Graph::is_independent(const VertexSet& s) const {
    for (int v = s.first(); v >= 0; v = s.next(static_cast<std::size_t>(v)))
        if (adj_[v].intersects(s)) return false;
    return true;
}

Graph Graph::read_text(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("graph fixture: missing header \"n m\"");
    if (n < 0 || n > kMaxGraphOrder) throw SizeError("graph fixture: bad vertex count");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v))
            throw std::runtime_error("graph fixture: expected " + std::to_string(m) +
                                     " edges, got " + std::to_string(i));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

void Graph::write_text(std::ostream& out) const {
    out << n_ << ' ' << edges_ << '\n';
    for (int u = 0; u < n_; ++u) {
        const VertexSet& row = neighbours(u);
        for (int v = row.next(static_cast<std::size_t>(u)); v >= 0;
             v = row.next(static_cast<std::size_t>(v)))
            out << u << ' ' << v << '\n';
    }
}

} // namespace chivar
