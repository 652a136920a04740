#include "chivar/colouring.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "chivar/errors.hpp"

namespace chivar {

std::size_t ColouringCertificate::max_size() const {
    std::size_t m = 0;
    for (const auto& c : classes) m = std::max(m, c.size());
    return m;
}

bool verify_colouring(const Graph& g, const ColouringCertificate& cert, int size_cap) {
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::size_t total = 0;
    for (const auto& cls : cert.classes) {
        if (cls.empty()) return false;
        if (size_cap > 0 && cls.size() > static_cast<std::size_t>(size_cap)) return false;
        VertexSet s(static_cast<std::size_t>(n));
        for (int v : cls) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
            s.set(static_cast<std::size_t>(v));
            ++total;
        }
        if (!g.is_independent(s)) return false;
    }
    return total == static_cast<std::size_t>(n);
}

int ChiResult::value() const {
    if (!exact) throw std::runtime_error("chromatic solve hit its budget; only bounds are known");
    return upper;
}

std::vector<int> greedy_clique(const Graph& g) {
    const int n = g.order();
    if (n == 0) return {};
    int start = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(start)) start = v;
    std::vector<int> clique{start};
    VertexSet cand = g.neighbours(start);
    while (cand.any()) {
        int pick = -1, best_deg = -1;
        for (int v = cand.first(); v >= 0; v = cand.next(static_cast<std::size_t>(v))) {
            int d = static_cast<int>((g.neighbours(v) & cand).count());
            if (d > best_deg) { best_deg = d; pick = v; }
        }
        clique.push_back(pick);
        cand &= g.neighbours(pick);
    }
    return clique;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxColours = 64;

// Shared DSATUR machinery for chi and chi_t.  size_cap == 0 means unbounded.
struct DsaturSolver {
    const Graph& g;
    int n;
    int size_cap;
    std::vector<std::uint64_t> satmask; // neighbour colours per vertex
    std::vector<int> colour;            // -1 = uncoloured
    std::vector<int> class_size;
    std::vector<int> static_degree;
    int best_ub;
    std::vector<int> best_assignment;
    std::uint64_t nodes = 0;
    Clock::time_point deadline;
    bool timed_out = false;

    DsaturSolver(const Graph& graph, int cap, Clock::time_point dl)
        : g(graph), n(graph.order()), size_cap(cap),
          satmask(static_cast<std::size_t>(n), 0),
          colour(static_cast<std::size_t>(n), -1),
          class_size(kMaxColours, 0),
          static_degree(static_cast<std::size_t>(n)), deadline(dl) {
        for (int v = 0; v < n; ++v) static_degree[static_cast<std::size_t>(v)] = g.degree(v);
        best_ub = n + 1;
    }

    bool colour_available(int v, int c) const {
        if ((satmask[static_cast<std::size_t>(v)] >> c) & 1u) return false;
        return size_cap == 0 || class_size[static_cast<std::size_t>(c)] < size_cap;
    }

    // Saturation-ordered selection: most distinct neighbour colours, then
    // largest degree, then lowest index.
    int select(int used) const {
        int pick = -1, best_sat = -1, best_deg = -1;
        std::uint64_t used_mask = used >= 64 ? ~std::uint64_t{0}
                                             : ((std::uint64_t{1} << used) - 1);
        for (int v = 0; v < n; ++v) {
            if (colour[static_cast<std::size_t>(v)] >= 0) continue;
            int sat = std::popcount(satmask[static_cast<std::size_t>(v)] & used_mask);
            int deg = static_degree[static_cast<std::size_t>(v)];
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best_sat = sat;
                best_deg = deg;
                pick = v;
            }
        }
        return pick;
    }

    std::vector<int> undo; // flat stack of vertices whose satmask gained a bit

    std::size_t assign(int v, int c) {
        std::size_t mark = undo.size();
        colour[static_cast<std::size_t>(v)] = c;
        ++class_size[static_cast<std::size_t>(c)];
        const VertexSet& nb = g.neighbours(v);
        for (int u = nb.first(); u >= 0; u = nb.next(static_cast<std::size_t>(u))) {
            if (colour[static_cast<std::size_t>(u)] >= 0) continue;
            if (!((satmask[static_cast<std::size_t>(u)] >> c) & 1u)) {
                satmask[static_cast<std::size_t>(u)] |= std::uint64_t{1} << c;
                undo.push_back(u);
            }
        }
        return mark;
    }

    void unassign(int v, int c, std::size_t mark) {
        colour[static_cast<std::size_t>(v)] = -1;
        --class_size[static_cast<std::size_t>(c)];
        while (undo.size() > mark) {
            satmask[static_cast<std::size_t>(undo.back())] &= ~(std::uint64_t{1} << c);
            undo.pop_back();
        }
    }

    void dfs(int coloured, int used) {
        if (timed_out || used >= best_ub) return;
        if (coloured == n) {
            best_ub = used;
            best_assignment = colour;
            return;
        }
        if ((++nodes & 1023u) == 0 && Clock::now() > deadline) {
            timed_out = true;
            return;
        }
        int v = select(used);
        for (int c = 0; c < used; ++c) {
            if (!colour_available(v, c)) continue;
            std::size_t mark = assign(v, c);
            dfs(coloured + 1, used);
            unassign(v, c, mark);
            if (timed_out) return;
        }
        if (used + 1 < best_ub && used < kMaxColours) {
            std::size_t mark = assign(v, used);
            dfs(coloured + 1, used + 1);
            unassign(v, used, mark);
        }
    }
};

ColouringCertificate to_certificate(const std::vector<int>& assignment, int k) {
    ColouringCertificate cert;
    cert.classes.assign(static_cast<std::size_t>(k), {});
    for (int v = 0; v < static_cast<int>(assignment.size()); ++v)
        cert.classes[static_cast<std::size_t>(assignment[static_cast<std::size_t>(v)])]
            .push_back(v);
    return cert;
}

ChiResult solve(const Graph& g, int size_cap, SolveBudget budget) {
    const int n = g.order();
    auto t0 = Clock::now();
    ChiResult out;
    if (n == 0) {
        out.lower = out.upper = 0;
        out.exact = true;
        return out;
    }

    ColouringCertificate greedy = greedy_colouring(g, size_cap);
    std::vector<int> clique = greedy_clique(g);
    int lb = static_cast<int>(clique.size());
    if (size_cap > 0) lb = std::max(lb, (n + size_cap - 1) / size_cap);
    int ub = greedy.k();

    out.lower = lb;
    out.upper = ub;
    out.certificate = greedy;
    if (lb >= ub) {
        out.exact = true;
        out.lower = out.upper;
        out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        return out;
    }
    if (ub > kMaxColours)
        throw SizeError("chromatic solver: more than 64 colours needed; instance too large");

    auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(budget.seconds));
    DsaturSolver solver(g, size_cap, deadline);
    solver.best_ub = ub;
    solver.best_assignment.clear();

    // Precolour the greedy clique: in any proper colouring its members hold
    // distinct colours, so fixing them to 0..q-1 is a pure symmetry cut.
    int used = 0;
    for (int v : clique) {
        solver.assign(v, used);
        ++used;
    }
    solver.dfs(static_cast<int>(clique.size()), used);

    out.nodes = solver.nodes;
    if (solver.best_assignment.empty()) {
        // search never improved on the greedy bound
        out.upper = ub;
    } else {
        out.upper = solver.best_ub;
        out.certificate = to_certificate(solver.best_assignment, solver.best_ub);
    }
    if (solver.timed_out) {
        out.lower = lb;
        out.exact = false;
    } else {
        out.lower = out.upper;
        out.exact = true;
    }
    out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return out;
}

} // namespace

ColouringCertificate greedy_colouring(const Graph& g, int size_cap) {
    const int n = g.order();
    std::vector<std::uint64_t> satmask(static_cast<std::size_t>(n), 0);
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    std::vector<int> class_size;
    std::vector<int> sat(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int pick = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[static_cast<std::size_t>(v)] >= 0) continue;
            if (sat[static_cast<std::size_t>(v)] > best_sat ||
                (sat[static_cast<std::size_t>(v)] == best_sat && g.degree(v) > best_deg)) {
                best_sat = sat[static_cast<std::size_t>(v)];
                best_deg = g.degree(v);
                pick = v;
            }
        }
        int c = 0;
        auto blocked = [&](int col) {
            if (col < 64 && ((satmask[static_cast<std::size_t>(pick)] >> col) & 1u)) return true;
            if (col < 64) {
                return size_cap > 0 && col < static_cast<int>(class_size.size()) &&
                       class_size[static_cast<std::size_t>(col)] >= size_cap;
            }
            // beyond 64 colours fall back to scanning neighbours
            const VertexSet& nb = g.neighbours(pick);
            for (int u = nb.first(); u >= 0; u = nb.next(static_cast<std::size_t>(u)))
                if (colour[static_cast<std::size_t>(u)] == col) return true;
            return size_cap > 0 && col < static_cast<int>(class_size.size()) &&
                   class_size[static_cast<std::size_t>(col)] >= size_cap;
        };
        while (blocked(c)) ++c;
        colour[static_cast<std::size_t>(pick)] = c;
        if (c >= static_cast<int>(class_size.size())) class_size.resize(static_cast<std::size_t>(c) + 1, 0);
        ++class_size[static_cast<std::size_t>(c)];
        const VertexSet& nb = g.neighbours(pick);
        for (int u = nb.first(); u >= 0; u = nb.next(static_cast<std::size_t>(u))) {
            if (colour[static_cast<std::size_t>(u)] >= 0) continue;
            if (c < 64 && !((satmask[static_cast<std::size_t>(u)] >> c) & 1u)) {
                satmask[static_cast<std::size_t>(u)] |= std::uint64_t{1} << c;
                ++sat[static_cast<std::size_t>(u)];
            }
        }
    }
    return to_certificate(colour, class_size.empty() ? 0 : static_cast<int>(class_size.size()));
}

ChiResult chromatic_number(const Graph& g, SolveBudget budget) {
    return solve(g, 0, budget);
}

ChiResult bounded_chromatic_number(const Graph& g, int t, SolveBudget budget) {
    if (t < 1) throw std::domain_error("bounded_chromatic_number: t must be >= 1");
    return solve(g, t, budget);
}

} // namespace chivar
