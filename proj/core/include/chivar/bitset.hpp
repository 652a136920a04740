#ifndef CHIVAR_BITSET_HPP
#define CHIVAR_BITSET_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace chivar {

// Dynamic bitset over a fixed universe [0, n).  Vertex sets and adjacency
// rows use this everywhere; solver inner loops are intersection-bound.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static VertexSet full(std::size_t n) {
        VertexSet s(n);
        for (std::size_t v = 0; v < n; ++v) s.set(v);
        return s;
    }

    std::size_t universe() const { return n_; }

    bool test(std::size_t v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
    void set(std::size_t v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(std::size_t v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    void clear() { for (auto& w : w_) w = 0; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (auto w : w_) if (w) return false;
        return true;
    }
    bool any() const { return !empty(); }

    // First set position, or -1.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    // First set position strictly above v, or -1.
    int next(std::size_t v) const {
        std::size_t i = (v + 1) >> 6;
        if (i >= w_.size()) return -1;
        std::uint64_t w = w_[i] & (~std::uint64_t{0} << ((v + 1) & 63));
        while (true) {
            if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
            if (++i >= w_.size()) return -1;
            w = w_[i];
        }
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // *this \ o
    VertexSet& and_not(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { a &= b; return a; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { a |= b; return a; }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(static_cast<std::size_t>(v)))
            out.push_back(v);
        return out;
    }

    bool operator==(const VertexSet&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace chivar

#endif
