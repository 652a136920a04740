#ifndef CHIVAR_GRAPH_HPP
#define CHIVAR_GRAPH_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "chivar/bitset.hpp"

namespace chivar {

inline constexpr int kMaxGraphOrder = 512;

// Labelled simple graph with bitset adjacency rows.  Immutable in spirit:
// build it, then share freely across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    std::size_t edge_count() const { return edges_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj_[u].test(static_cast<std::size_t>(v)); }
    const VertexSet& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].count()); }

    bool is_independent(const VertexSet& s) const;

    // Text fixture format: first line "n m", then m lines "u v" (0-based).
    static Graph read_text(std::istream& in);
    void write_text(std::ostream& out) const;

private:
    int n_ = 0;
    std::size_t edges_ = 0;
    std::vector<VertexSet> adj_;
};

} // namespace chivar

#endif
