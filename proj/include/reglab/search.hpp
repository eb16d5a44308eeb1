// Exact combinatorial solvers shared by the domination and complex modules:
// maximum independent set, minimum set cover, minimum independent dominating
// set, and minimal-hitting-set enumeration in the style of Murakami and Uno.
// Everything is branch and bound with certified exact answers; budgets turn
// blow-ups into budget_exceeded, never into approximate values.

#ifndef REGLAB_SEARCH_HPP
#define REGLAB_SEARCH_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "core.hpp"

namespace reglab {

/// 128-bit vertex set for solvers whose universe can exceed 64 elements
/// (line graphs and conflict graphs of edges). Ground objects stay <= 64.
struct Bits128 {
    std::uint64_t w0 = 0, w1 = 0;

    static Bits128 single(int v) {
        Bits128 b;
        if (v < 64) b.w0 = std::uint64_t{1} << v;
        else b.w1 = std::uint64_t{1} << (v - 64);
        return b;
    }
    static Bits128 first_n(int n) {
        Bits128 b;
        b.w0 = n >= 64 ? ~std::uint64_t{0} : (n <= 0 ? 0 : (std::uint64_t{1} << n) - 1);
        b.w1 = n <= 64 ? 0 : (n >= 128 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - 64)) - 1);
        return b;
    }
    bool test(int v) const { return v < 64 ? (w0 >> v) & 1 : (w1 >> (v - 64)) & 1; }
    void set(int v) { if (v < 64) w0 |= std::uint64_t{1} << v; else w1 |= std::uint64_t{1} << (v - 64); }
    void reset(int v) { if (v < 64) w0 &= ~(std::uint64_t{1} << v); else w1 &= ~(std::uint64_t{1} << (v - 64)); }
    bool any() const { return w0 || w1; }
    int count() const { return std::popcount(w0) + std::popcount(w1); }
    int lowest() const { return w0 ? std::countr_zero(w0) : 64 + std::countr_zero(w1); }
    friend Bits128 operator&(Bits128 a, Bits128 b) { return {a.w0 & b.w0, a.w1 & b.w1}; }
    friend Bits128 operator|(Bits128 a, Bits128 b) { return {a.w0 | b.w0, a.w1 | b.w1}; }
    friend Bits128 operator~(Bits128 a) { return {~a.w0, ~a.w1}; }
    friend Bits128 andnot(Bits128 a, Bits128 b) { return {a.w0 & ~b.w0, a.w1 & ~b.w1}; }
    friend bool operator==(const Bits128& a, const Bits128& b) = default;

    template <typename F>
    void for_each(F&& f) const {
        std::uint64_t m = w0;
        while (m) { f(std::countr_zero(m)); m &= m - 1; }
        m = w1;
        while (m) { f(64 + std::countr_zero(m)); m &= m - 1; }
    }
};

// ---------------------------------------------------------------------------
// Maximum independent set.
// ---------------------------------------------------------------------------

namespace detail {

struct MisSolver {
    const std::vector<Bits128>* adj;
    Budget* budget;
    int best = -1;
    Bits128 best_set{};
    Bits128 current{};

    /// Greedy clique cover of the candidate set; the number of cliques is an
    /// upper bound on the independence number of the candidates.
    int clique_cover_bound(Bits128 cand) const {
        int cliques = 0;
        std::vector<Bits128> clique_common;
        cand.for_each([&](int v) {
            const Bits128& nv = (*adj)[static_cast<size_t>(v)];
            for (auto& common : clique_common) {
                if (common.test(v)) {
                    common = common & nv;
                    return;
                }
            }
            clique_common.push_back(nv);
            ++cliques;
        });
        return cliques;
    }

    void run(Bits128 cand, int size) {
        budget->tick();
        while (true) {
            if (!cand.any()) {
                if (size > best) { best = size; best_set = current; }
                return;
            }
            if (size + cand.count() <= best) return;
            // Reductions: candidates with no or one candidate neighbour are
            // always safe to take.
            int forced = -1, max_deg = -1, branch_v = -1;
            cand.for_each([&](int v) {
                int d = ((*adj)[static_cast<size_t>(v)] & cand).count();
                if (d <= 1 && forced < 0) forced = v;
                if (d > max_deg) { max_deg = d; branch_v = v; }
            });
            if (forced >= 0) {
                current.set(forced);
                ++size;
                cand = andnot(cand, (*adj)[static_cast<size_t>(forced)] | Bits128::single(forced));
                continue;
            }
            if (size + clique_cover_bound(cand) <= best) return;
            // Branch on a maximum-degree candidate: in, then out.
            Bits128 with = andnot(cand, (*adj)[static_cast<size_t>(branch_v)] | Bits128::single(branch_v));
            current.set(branch_v);
            run(with, size + 1);
            current.reset(branch_v);
            cand.reset(branch_v);
        }
    }
};

}  // namespace detail

/// Exact maximum independent set of the graph given by 128-bit adjacency
/// rows on vertices 0..n-1.
inline int max_independent_set(const std::vector<Bits128>& adj, int n, Budget& budget,
                               Bits128* witness = nullptr) {
    detail::MisSolver s;
    s.adj = &adj;
    s.budget = &budget;
    s.best = -1;
    s.run(Bits128::first_n(n), 0);
    if (witness) *witness = s.best_set;
    return s.best;
}

// ---------------------------------------------------------------------------
// Minimum set cover (universe <= 64 elements, any number of sets; an
// optional conflict relation on set indices supports matching-restricted
// covers, in which case at most 128 sets are allowed).
// ---------------------------------------------------------------------------

namespace detail {

struct CoverSolver {
    const std::vector<Mask>* sets;
    const std::vector<Bits128>* conflicts;  // may be null
    Budget* budget;
    int best = -1;
    std::vector<int> best_chosen, current;

    int packing_bound(Mask uncovered, const Bits128& avail) const {
        // Greedy packing of uncovered elements no available set covers two
        // of; its size lower-bounds the number of further sets needed.
        int lb = 0;
        Mask blocked = 0;
        for_each_bit(uncovered, [&](int e) {
            if (contains(blocked, e)) return;
            ++lb;
            Mask reach = bit(e);
            avail.for_each([&](int i) {
                if (contains((*sets)[static_cast<size_t>(i)], e))
                    reach |= (*sets)[static_cast<size_t>(i)];
            });
            blocked |= reach;
        });
        return lb;
    }

    void run(Mask uncovered, Bits128 avail, int size) {
        budget->tick();
        if (!uncovered) {
            if (best < 0 || size < best) { best = size; best_chosen = current; }
            return;
        }
        if (best >= 0 && size + packing_bound(uncovered, avail) >= best) return;
        // Pick the uncovered element with the fewest available covers.
        int pick = -1, fewest = -1;
        for_each_bit(uncovered, [&](int e) {
            int c = 0;
            avail.for_each([&](int i) {
                if (contains((*sets)[static_cast<size_t>(i)], e)) ++c;
            });
            if (fewest < 0 || c < fewest) { fewest = c; pick = e; }
        });
        if (fewest == 0) return;  // infeasible branch
        std::vector<int> covers;
        avail.for_each([&](int i) {
            if (contains((*sets)[static_cast<size_t>(i)], pick)) covers.push_back(i);
        });
        for (int i : covers) {
            Bits128 next_avail = avail;
            next_avail.reset(i);
            Bits128 child_avail = next_avail;
            if (conflicts) child_avail = andnot(child_avail, (*conflicts)[static_cast<size_t>(i)]);
            current.push_back(i);
            run(uncovered & ~(*sets)[static_cast<size_t>(i)], child_avail, size + 1);
            current.pop_back();
            avail.reset(i);  // later branches must avoid earlier choices
        }
    }
};

}  // namespace detail

/// Exact minimum cover of `universe` by the given sets. Returns chosen set
/// indices, or std::nullopt when no cover exists.
inline std::optional<std::vector<int>> min_set_cover(const std::vector<Mask>& sets, Mask universe,
                                                     Budget& budget,
                                                     const std::vector<Bits128>* conflicts = nullptr) {
    if (sets.size() > 128) throw std::invalid_argument("min_set_cover: too many sets");
    detail::CoverSolver s;
    s.sets = &sets;
    s.conflicts = conflicts;
    s.budget = &budget;
    s.run(universe, Bits128::first_n(static_cast<int>(sets.size())), 0);
    if (s.best < 0) return std::nullopt;
    return s.best_chosen;
}

// ---------------------------------------------------------------------------
// Minimum independent dominating set (minimum maximal independent set).
// ---------------------------------------------------------------------------

namespace detail {

struct IndDomSolver {
    const std::vector<Bits128>* adj;
    int n;
    Budget* budget;
    int best = -1;
    Bits128 best_set{}, current{};

    int packing_bound(Bits128 undominated, Bits128 allowed) const {
        int lb = 0;
        Bits128 blocked{};
        undominated.for_each([&](int u) {
            if (blocked.test(u)) return;
            ++lb;
            Bits128 ball = (*adj)[static_cast<size_t>(u)] | Bits128::single(u);
            Bits128 reach = ball;
            (ball & allowed).for_each([&](int c) {
                reach = reach | (*adj)[static_cast<size_t>(c)] | Bits128::single(c);
            });
            blocked = blocked | reach;
        });
        return lb;
    }

    // allowed: vertices that may still join the set (not excluded, not
    // adjacent to the current set). dominated: N[current].
    void run(Bits128 dominated, Bits128 allowed, int size) {
        budget->tick();
        Bits128 undominated = andnot(Bits128::first_n(n), dominated);
        if (!undominated.any()) {
            if (best < 0 || size < best) { best = size; best_set = current; }
            return;
        }
        if (best >= 0 && size + packing_bound(undominated, allowed) >= best) return;
        // Pick an undominated vertex with the fewest allowed dominators;
        // one of them must join the set.
        int pick = -1, fewest = -1;
        undominated.for_each([&](int u) {
            int c = ((((*adj)[static_cast<size_t>(u)] | Bits128::single(u))) & allowed).count();
            if (fewest < 0 || c < fewest) { fewest = c; pick = u; }
        });
        if (fewest == 0) return;
        Bits128 cands = ((*adj)[static_cast<size_t>(pick)] | Bits128::single(pick)) & allowed;
        std::vector<int> order;
        cands.for_each([&](int c) { order.push_back(c); });
        Bits128 excluded{};
        for (int c : order) {
            current.set(c);
            Bits128 child_allowed = andnot(allowed, (*adj)[static_cast<size_t>(c)] | Bits128::single(c));
            child_allowed = andnot(child_allowed, excluded);
            run(dominated | (*adj)[static_cast<size_t>(c)] | Bits128::single(c), child_allowed, size + 1);
            current.reset(c);
            excluded.set(c);
            allowed.reset(c);
        }
    }
};

}  // namespace detail

/// Exact minimum size of a maximal independent set (equivalently a minimum
/// independent dominating set). Requires n >= 1.
inline int min_independent_dominating(const std::vector<Bits128>& adj, int n, Budget& budget,
                                      Bits128* witness = nullptr) {
    if (n <= 0) throw std::invalid_argument("min_independent_dominating: empty graph");
    detail::IndDomSolver s;
    s.adj = &adj;
    s.n = n;
    s.budget = &budget;
    s.run(Bits128{}, Bits128::first_n(n), 0);
    if (s.best < 0) throw std::logic_error("independent dominating set must exist");
    if (witness) *witness = s.best_set;
    return s.best;
}

// ---------------------------------------------------------------------------
// Minimal hitting sets (minimal transversals) of a hypergraph over <= 64
// ground elements. Branching on an uncovered edge with left-to-right
// exclusion visits every minimal hitting set exactly once; the criticality
// check prunes branches that can no longer stay minimal.
// ---------------------------------------------------------------------------

namespace detail {

struct TransversalEnum {
    const std::vector<Mask>* edges;
    Budget* budget;
    std::function<bool(Mask)> emit;   // returns false to stop the enumeration
    const std::vector<Mask>* indep;   // optional adjacency constraint on members
    const int* objective_floor;       // optional: prune when |S| + |uncov| <= floor
    bool stopped = false;

    std::vector<int> hitcnt;  // per edge: |S ∩ edge|
    std::vector<int> solo;    // unique hitter when hitcnt == 1

    bool would_break_minimality(Mask S, int v) const {
        // Adding v must leave every current member with a critical edge.
        for (int s : mask_to_vector(S)) {
            bool has = false;
            for (size_t e = 0; e < edges->size(); ++e) {
                if (hitcnt[e] == 1 && solo[e] == s && !contains((*edges)[e], v)) {
                    has = true;
                    break;
                }
            }
            if (!has) return true;
        }
        return false;
    }

    void add(int v) {
        for (size_t e = 0; e < edges->size(); ++e) {
            if (!contains((*edges)[e], v)) continue;
            if (++hitcnt[e] == 1) solo[e] = v;
        }
    }

    void remove(int v, Mask others) {
        for (size_t e = 0; e < edges->size(); ++e) {
            if (!contains((*edges)[e], v)) continue;
            if (--hitcnt[e] == 1) solo[e] = lowest_bit((*edges)[e] & others);
        }
    }

    void rec(Mask S, Mask excluded) {
        if (stopped) return;
        budget->tick();
        int uncovered = -1, fewest = -1, unc_count = 0;
        for (size_t e = 0; e < edges->size(); ++e) {
            if (hitcnt[e] > 0) continue;
            ++unc_count;
            int c = popcount((*edges)[e] & ~excluded);
            if (fewest < 0 || c < fewest) {
                fewest = c;
                uncovered = static_cast<int>(e);
            }
        }
        if (uncovered < 0) {
            if (!emit(S)) stopped = true;
            return;
        }
        // Every future member needs a private edge drawn from the currently
        // uncovered ones, so |uncov| bounds the remaining growth.
        if (objective_floor && popcount(S) + unc_count <= *objective_floor) return;
        if (fewest == 0) return;
        Mask C = (*edges)[static_cast<size_t>(uncovered)] & ~excluded;
        for (int v : mask_to_vector(C)) {
            bool ok = !would_break_minimality(S, v);
            if (ok && indep && ((*indep)[static_cast<size_t>(v)] & S) != 0) ok = false;
            if (ok) {
                add(v);
                rec(S | bit(v), excluded);
                remove(v, S);
                if (stopped) return;
            }
            excluded |= bit(v);
        }
    }

    void run() {
        hitcnt.assign(edges->size(), 0);
        solo.assign(edges->size(), -1);
        for (const Mask e : *edges)
            if (e == 0) return;  // an empty edge admits no hitting set
        rec(0, 0);
    }
};

}  // namespace detail

/// Enumerates every minimal hitting set of `edges` (masks over ground
/// 0..ground-1), invoking emit(S); emit returning false stops early. When
/// `independence_adj` is given, only hitting sets forming an independent set
/// in that adjacency are visited; those are exactly the minimal independent
/// transversals, because a subset of an independent set stays independent.
/// A hypergraph with no edges has the single minimal hitting set {}; one
/// with an empty edge has none.
template <typename Emit>
void for_each_minimal_hitting_set(const std::vector<Mask>& edges, int /*ground*/, Budget& budget,
                                  Emit&& emit, const std::vector<Mask>* independence_adj = nullptr) {
    detail::TransversalEnum t;
    t.edges = &edges;
    t.budget = &budget;
    t.emit = std::ref(emit);
    t.indep = independence_adj;
    t.objective_floor = nullptr;
    t.run();
}

/// Maximum cardinality of a minimal hitting set, with witness; -1 when no
/// hitting set exists.
inline int max_minimal_hitting_set(const std::vector<Mask>& edges, int ground, Budget& budget,
                                   Mask* witness = nullptr,
                                   const std::vector<Mask>* independence_adj = nullptr) {
    int best = -1;
    Mask best_set = 0;
    detail::TransversalEnum t;
    auto emit = [&](Mask S) {
        if (popcount(S) > best) { best = popcount(S); best_set = S; }
        return true;
    };
    t.edges = &edges;
    t.budget = &budget;
    t.emit = emit;
    t.indep = independence_adj;
    t.objective_floor = &best;
    (void)ground;
    t.run();
    if (witness) *witness = best_set;
    return best;
}

}  // namespace reglab

#endif  // REGLAB_SEARCH_HPP
