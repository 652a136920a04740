#include "chivar/mis.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "chivar/errors.hpp"

namespace chivar {

int MisResult::value() const {
    if (!exact) throw std::runtime_error("MIS solve hit its budget; only bounds are known");
    return lower;
}

namespace {

using Clock = std::chrono::steady_clock;

// Greedy clique cover of the candidate set: an upper bound on the largest
// independent subset (each clique meets it at most once).
int clique_cover_bound(const Graph& g, VertexSet cand) {
    int cliques = 0;
    while (cand.any()) {
        int v = cand.first();
        VertexSet clique(cand.universe());
        clique.set(static_cast<std::size_t>(v));
        cand.reset(static_cast<std::size_t>(v));
        VertexSet common = g.neighbours(v) & cand;
        while (common.any()) {
            int u = common.first();
            clique.set(static_cast<std::size_t>(u));
            cand.reset(static_cast<std::size_t>(u));
            common &= g.neighbours(u);
        }
        ++cliques;
    }
    return cliques;
}

struct MisSolver {
    const Graph& g;
    VertexSet best;
    int best_size = 0;
    std::uint64_t nodes = 0;
    Clock::time_point deadline;
    bool timed_out = false;

    explicit MisSolver(const Graph& graph, Clock::time_point dl) : g(graph), deadline(dl) {}

    void dfs(VertexSet cand, VertexSet chosen, int chosen_size) {
        if (timed_out) return;
        if ((++nodes & 2047u) == 0 && Clock::now() > deadline) {
            timed_out = true;
            return;
        }
        int c = static_cast<int>(cand.count());
        if (chosen_size + c <= best_size) return;
        if (c == 0) {
            best = chosen;
            best_size = chosen_size;
            return;
        }
        if (chosen_size + clique_cover_bound(g, cand) <= best_size) return;

        // branch on the densest candidate
        int v = -1, best_deg = -1;
        for (int u = cand.first(); u >= 0; u = cand.next(static_cast<std::size_t>(u))) {
            int d = static_cast<int>((g.neighbours(u) & cand).count());
            if (d > best_deg) { best_deg = d; v = u; }
        }
        // include v
        VertexSet with = cand;
        with.and_not(g.neighbours(v));
        with.reset(static_cast<std::size_t>(v));
        VertexSet chosen2 = chosen;
        chosen2.set(static_cast<std::size_t>(v));
        dfs(with, chosen2, chosen_size + 1);
        if (timed_out) return;
        // exclude v
        cand.reset(static_cast<std::size_t>(v));
        dfs(cand, chosen, chosen_size);
    }
};

} // namespace

MisResult independence_number(const Graph& g, SolveBudget budget) {
    auto t0 = Clock::now();
    auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(budget.seconds));
    const int n = g.order();
    MisResult out;
    out.witness = VertexSet(static_cast<std::size_t>(n));
    if (n == 0) {
        out.exact = true;
        return out;
    }
    MisSolver solver(g, deadline);
    solver.best = VertexSet(static_cast<std::size_t>(n));
    solver.dfs(VertexSet::full(static_cast<std::size_t>(n)),
               VertexSet(static_cast<std::size_t>(n)), 0);
    out.lower = solver.best_size;
    out.witness = solver.best;
    out.nodes = solver.nodes;
    out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (solver.timed_out) {
        out.upper = clique_cover_bound(g, VertexSet::full(static_cast<std::size_t>(n)));
        out.exact = false;
    } else {
        out.upper = out.lower;
        out.exact = true;
    }
    return out;
}

namespace {

std::int64_t count_sets_from(const Graph& g, VertexSet cand, int need) {
    if (need == 0) return 1;
    std::int64_t total = 0;
    int c = static_cast<int>(cand.count());
    if (c < need) return 0;
    for (int v = cand.first(); v >= 0; v = cand.next(static_cast<std::size_t>(v))) {
        if (need == 1) {
            ++total;
            continue;
        }
        VertexSet rest = cand;
        // only vertices above v, and not adjacent to v
        for (int u = rest.first(); u >= 0 && u <= v; u = rest.next(static_cast<std::size_t>(u)))
            rest.reset(static_cast<std::size_t>(u));
        rest.and_not(g.neighbours(v));
        total += count_sets_from(g, rest, need - 1);
    }
    return total;
}

} // namespace

std::int64_t count_independent_sets(const Graph& g, int a) {
    if (a < 1) throw std::domain_error("count_independent_sets: a must be >= 1");
    if (g.order() > 64 || a > 10)
        throw SizeError("count_independent_sets: guarded to n <= 64 and a <= 10");
    if (a > g.order()) return 0;
    return count_sets_from(g, VertexSet::full(static_cast<std::size_t>(g.order())), a);
}

namespace {

void enumerate_independent_sets(const Graph& g, int a, std::vector<VertexSet>& out) {
    struct Rec {
        const Graph& g;
        int a;
        std::vector<VertexSet>& out;
        VertexSet current;
        Rec(const Graph& gr, int aa, std::vector<VertexSet>& o)
            : g(gr), a(aa), out(o), current(static_cast<std::size_t>(gr.order())) {}
        void go(VertexSet cand, int depth, int min_vertex) {
            if (depth == a) {
                out.push_back(current);
                return;
            }
            if (static_cast<int>(cand.count()) < a - depth) return;
            for (int v = cand.first(); v >= 0; v = cand.next(static_cast<std::size_t>(v))) {
                if (v < min_vertex) continue;
                VertexSet rest = cand;
                for (int u = rest.first(); u >= 0 && u <= v;
                     u = rest.next(static_cast<std::size_t>(u)))
                    rest.reset(static_cast<std::size_t>(u));
                rest.and_not(g.neighbours(v));
                current.set(static_cast<std::size_t>(v));
                go(rest, depth + 1, v + 1);
                current.reset(static_cast<std::size_t>(v));
            }
        }
    } rec(g, a, out);
    rec.go(VertexSet::full(static_cast<std::size_t>(g.order())), 0, 0);
}

struct PackSolver {
    int a;
    const std::vector<VertexSet>& sets;
    std::vector<std::vector<int>> by_vertex; // set indices containing v
    std::vector<int> best_pick;
    std::vector<int> pick;

    void dfs(VertexSet free) {
        if (pick.size() + free.count() / static_cast<std::size_t>(a) <= best_pick.size())
            return;
        // lowest free vertex that can still be covered
        int v = -1;
        for (int u = free.first(); u >= 0; u = free.next(static_cast<std::size_t>(u))) {
            bool coverable = false;
            for (int idx : by_vertex[static_cast<std::size_t>(u)]) {
                if (sets[static_cast<std::size_t>(idx)].is_subset_of(free)) {
                    coverable = true;
                    break;
                }
            }
            if (coverable) { v = u; break; }
            free.reset(static_cast<std::size_t>(u)); // dead vertex, drop it
        }
        if (v < 0) {
            if (pick.size() > best_pick.size()) best_pick = pick;
            return;
        }
        for (int idx : by_vertex[static_cast<std::size_t>(v)]) {
            const VertexSet& s = sets[static_cast<std::size_t>(idx)];
            if (!s.is_subset_of(free)) continue;
            VertexSet rest = free;
            rest.and_not(s);
            pick.push_back(idx);
            dfs(rest);
            pick.pop_back();
        }
        // leave v uncovered
        free.reset(static_cast<std::size_t>(v));
        dfs(free);
    }
};

} // namespace

PackingResult max_disjoint_a_sets(const Graph& g, int a, bool exact_mode) {
    if (a < 1) throw std::domain_error("max_disjoint_a_sets: a must be >= 1");
    PackingResult out;
    if (!exact_mode) {
        // deterministic maximal packing: repeatedly take the lexicographically
        // first independent a-set among free vertices
        VertexSet free = VertexSet::full(static_cast<std::size_t>(g.order()));
        while (true) {
            struct Finder {
                const Graph& g;
                int a;
                bool found = false;
                VertexSet current, result;
                Finder(const Graph& gr, int aa)
                    : g(gr), a(aa), current(static_cast<std::size_t>(gr.order())),
                      result(static_cast<std::size_t>(gr.order())) {}
                void go(VertexSet cand, int depth) {
                    if (found) return;
                    if (depth == a) {
                        result = current;
                        found = true;
                        return;
                    }
                    if (static_cast<int>(cand.count()) < a - depth) return;
                    for (int v = cand.first(); v >= 0 && !found;
                         v = cand.next(static_cast<std::size_t>(v))) {
                        VertexSet rest = cand;
                        for (int u = rest.first(); u >= 0 && u <= v;
                             u = rest.next(static_cast<std::size_t>(u)))
                            rest.reset(static_cast<std::size_t>(u));
                        rest.and_not(g.neighbours(v));
                        current.set(static_cast<std::size_t>(v));
                        go(rest, depth + 1);
                        current.reset(static_cast<std::size_t>(v));
                    }
                }
            } finder(g, a);
            finder.go(free, 0);
            if (!finder.found) break;
            out.sets.push_back(finder.result);
            free.and_not(finder.result);
        }
        out.size = static_cast<int>(out.sets.size());
        out.exact = false;
        return out;
    }

    if (g.order() > 64 || a > 10)
        throw SizeError("max_disjoint_a_sets: exact mode guarded to n <= 64 and a <= 10");
    std::vector<VertexSet> sets;
    enumerate_independent_sets(g, a, sets);
    PackSolver solver{a, sets, {}, {}, {}};
    solver.by_vertex.assign(static_cast<std::size_t>(g.order()), {});
    for (int i = 0; i < static_cast<int>(sets.size()); ++i)
        for (int v : sets[static_cast<std::size_t>(i)].to_vector())
            solver.by_vertex[static_cast<std::size_t>(v)].push_back(i);
    solver.dfs(VertexSet::full(static_cast<std::size_t>(g.order())));
    out.size = static_cast<int>(solver.best_pick.size());
    out.exact = true;
    for (int idx : solver.best_pick) out.sets.push_back(sets[static_cast<std::size_t>(idx)]);
    return out;
}

} // namespace chivar
