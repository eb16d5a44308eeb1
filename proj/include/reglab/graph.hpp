// Simple undirected graphs on labelled vertices 0..n-1, the standard
// families and products, recognition predicates, and a canonical-form
// isomorphism test good for the desk scale this library targets.

#ifndef REGLAB_GRAPH_HPP
#define REGLAB_GRAPH_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace reglab {

/// Immutable simple graph: no loops, no multi-edges, endpoints < n.
/// Derived graphs are always new values; there is no in-place mutation,
/// so instances can be shared freely across threads.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
        if (n < 0 || n > kMaxGround) throw std::invalid_argument("graph order out of range");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge_internal(u, v);
        return g;
    }

    int order() const { return n_; }

    int size() const {
        int m = 0;
        for (int v = 0; v < n_; ++v) m += popcount(adj_[static_cast<size_t>(v)]);
        return m / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return contains(adj_[static_cast<size_t>(u)], v);
    }

    Mask neighbourhood(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    Mask closed_neighbourhood(int v) const { return neighbourhood(v) | bit(v); }

    Mask neighbourhood_of_set(Mask s) const {
        Mask out = 0;
        for_each_bit(s, [&](int v) { out |= adj_[static_cast<size_t>(v)]; });
        return out;
    }

    Mask closed_neighbourhood_of_set(Mask s) const { return neighbourhood_of_set(s) | s; }

    int degree(int v) const { return popcount(neighbourhood(v)); }

    Mask vertex_mask() const { return full_mask(n_); }

    bool is_isolated(int v) const { return neighbourhood(v) == 0; }

    bool has_any_edge() const {
        for (int v = 0; v < n_; ++v)
            if (adj_[static_cast<size_t>(v)]) return true;
        return false;
    }

    /// Edges as pairs (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for_each_bit(adj_[static_cast<size_t>(u)] & ~full_mask(u + 1), [&](int v) {
                out.emplace_back(u, v);
            });
        return out;
    }

    /// Induced subgraph on the vertices of `keep`, relabelled to 0..k-1 in
    /// ascending order of their original indices.
    Graph induced(Mask keep) const {
        keep &= vertex_mask();
        std::array<int, kMaxGround> new_id{};
        int k = 0;
        for_each_bit(keep, [&](int v) { new_id[static_cast<size_t>(v)] = k++; });
        Graph g(k);
        for_each_bit(keep, [&](int v) {
            for_each_bit(adj_[static_cast<size_t>(v)] & keep, [&](int w) {
                if (v < w)
                    g.add_edge_internal(new_id[static_cast<size_t>(v)],
                                        new_id[static_cast<size_t>(w)]);
            });
        });
        return g;
    }

    Graph remove_vertex(int v) const {
        check_vertex(v);
        return induced(vertex_mask() & ~bit(v));
    }

    Graph remove_closed_neighbourhood(int v) const {
        check_vertex(v);
        return induced(vertex_mask() & ~closed_neighbourhood(v));
    }

    /// Graph with all isolated vertices removed (written G° in places).
    Graph without_isolated_vertices() const {
        Mask keep = 0;
        for (int v = 0; v < n_; ++v)
            if (adj_[static_cast<size_t>(v)]) keep |= bit(v);
        return induced(keep);
    }

    Graph complement() const {
        Graph g(n_);
        for (int v = 0; v < n_; ++v)
            g.adj_[static_cast<size_t>(v)] = ~adj_[static_cast<size_t>(v)] & vertex_mask() & ~bit(v);
        return g;
    }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    }

    void add_edge_internal(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge rejected");
        if (has_edge(u, v)) throw std::invalid_argument("duplicate edge rejected");
        adj_[static_cast<size_t>(u)] |= bit(v);
        adj_[static_cast<size_t>(v)] |= bit(u);
    }

    friend Graph graph_with_extra_edges(const Graph&, const std::vector<std::pair<int, int>>&);

    int n_ = 0;
    std::vector<Mask> adj_;
    std::vector<std::string> labels_;
};

/// New graph equal to g plus the listed edges.
inline Graph graph_with_extra_edges(const Graph& g, const std::vector<std::pair<int, int>>& extra) {
    Graph out = g;
    for (auto [u, v] : extra) out.add_edge_internal(u, v);
    return out;
}

/// Graph plus a two-sided partition; side(v) is 0 or 1 and every edge
/// joins side 0 to side 1.
struct BipartiteGraph {
    Graph graph;
    std::vector<int> side;

    BipartiteGraph() = default;
    BipartiteGraph(Graph g, std::vector<int> s) : graph(std::move(g)), side(std::move(s)) {
        if (static_cast<int>(side.size()) != graph.order())
            throw std::invalid_argument("side vector length mismatch");
        for (int v : mask_to_vector(graph.vertex_mask()))
            if (side[static_cast<size_t>(v)] != 0 && side[static_cast<size_t>(v)] != 1)
                throw std::invalid_argument("side labels must be 0 or 1");
        for (auto [u, v] : graph.edges())
            if (side[static_cast<size_t>(u)] == side[static_cast<size_t>(v)])
                throw std::invalid_argument("edge inside one side of a bipartition");
    }

    Mask side_mask(int i) const {
        Mask m = 0;
        for (int v = 0; v < graph.order(); ++v)
            if (side[static_cast<size_t>(v)] == i) m |= bit(v);
        return m;
    }

    int side_count(int i) const { return popcount(side_mask(i)); }
};

// ---------------------------------------------------------------------------
// Standard families. Vertex numbering is fixed and documented per family so
// tests and serialized witnesses are reproducible.
// ---------------------------------------------------------------------------

/// Path on n vertices: edges {i, i+1}.
inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    Graph g(n);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

/// Cycle on n >= 3 vertices: path edges plus {n-1, 0}.
inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

inline Graph edgeless_graph(int n) { return Graph(n); }

/// K_{a,b}: side A is 0..a-1, side B is a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite needs a,b >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, e);
}

/// Star K_{1,n}: centre 0, leaves 1..n.
inline Graph star_graph(int n) { return complete_bipartite(1, n); }

/// Whisker of the complete graph W(K_n): K_n on 0..n-1 plus a pendant
/// vertex n+i attached to vertex i.
inline Graph whisker_complete(int n) {
    if (n < 1) throw std::invalid_argument("whisker needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    for (int i = 0; i < n; ++i) e.emplace_back(i, n + i);
    return Graph::from_edges(2 * n, e);
}

/// Disjoint union; h's vertices are shifted by |g|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > kMaxGround) throw std::invalid_argument("disjoint union too large");
    std::vector<std::pair<int, int>> e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(g.order() + u, g.order() + v);
    return Graph::from_edges(n, e);
}

/// r vertex-disjoint copies of g, copy p occupying [p*|g|, (p+1)*|g|).
inline Graph disjoint_copies(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("need at least one copy");
    Graph out = g;
    for (int p = 1; p < r; ++p) out = disjoint_union(out, g);
    return out;
}

/// Join G*H: disjoint union plus every cross pair as an edge.
inline Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    std::vector<std::pair<int, int>> cross;
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) cross.emplace_back(u, g.order() + v);
    return graph_with_extra_edges(out, cross);
}

/// Named-family dispatcher used by the CLI and by corpus descriptors.
/// Kinds: path(n), cycle(n), complete(n), complete-bipartite(a,b),
/// star(n), whisker-complete(n), edgeless(n).
inline Graph build_family(const std::string& kind, const std::vector<int>& params) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family '" + kind + "' expects " + std::to_string(k) +
                                        " parameter(s)");
        for (int p : params)
            if (p <= 0) throw std::invalid_argument("family parameters must be positive");
    };
    if (kind == "path") { want(1); return path_graph(params[0]); }
    if (kind == "cycle") { want(1); return cycle_graph(params[0]); }
    if (kind == "complete") { want(1); return complete_graph(params[0]); }
    if (kind == "complete-bipartite") { want(2); return complete_bipartite(params[0], params[1]); }
    if (kind == "star") { want(1); return star_graph(params[0]); }
    if (kind == "whisker-complete") { want(1); return whisker_complete(params[0]); }
    if (kind == "edgeless") { want(1); return edgeless_graph(params[0]); }
    throw std::invalid_argument("unknown graph family '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Derived graphs and predicates.
// ---------------------------------------------------------------------------

/// Subdivision graph S(G): side 0 carries the original vertices 0..n-1,
/// side 1 one vertex n+j per edge j (edges in sorted order), with the edge
/// vertex joined to its two endpoints.
inline BipartiteGraph subdivision(const Graph& g) {
    auto es = g.edges();
    int n = g.order(), m = static_cast<int>(es.size());
    if (n + m > kMaxGround) throw std::invalid_argument("subdivision too large");
    std::vector<std::pair<int, int>> e;
    for (int j = 0; j < m; ++j) {
        e.emplace_back(es[static_cast<size_t>(j)].first, n + j);
        e.emplace_back(es[static_cast<size_t>(j)].second, n + j);
    }
    std::vector<int> side(static_cast<size_t>(n + m), 0);
    for (int j = 0; j < m; ++j) side[static_cast<size_t>(n + j)] = 1;
    return BipartiteGraph(Graph::from_edges(n + m, e), std::move(side));
}

/// All-pairs distances by BFS; -1 encodes unreachable.
inline std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<int>> d(static_cast<size_t>(n),
                                    std::vector<int>(static_cast<size_t>(n), -1));
    for (int s = 0; s < n; ++s) {
        auto& row = d[static_cast<size_t>(s)];
        row[static_cast<size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for_each_bit(g.neighbourhood(u), [&](int w) {
                if (row[static_cast<size_t>(w)] < 0) {
                    row[static_cast<size_t>(w)] = row[static_cast<size_t>(u)] + 1;
                    q.push(w);
                }
            });
        }
    }
    return d;
}

/// Square G^2: same vertices, edge iff graph distance 1 or 2.
inline Graph square(const Graph& g) {
    Graph out(g.order());
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < g.order(); ++v) {
        Mask reach = g.neighbourhood(v) | g.neighbourhood_of_set(g.neighbourhood(v));
        for_each_bit(reach & ~bit(v) & ~full_mask(v + 1), [&](int w) { e.emplace_back(v, w); });
    }
    return Graph::from_edges(g.order(), e);
}

/// Connected components as vertex masks, ordered by smallest member.
inline std::vector<Mask> components(const Graph& g) {
    std::vector<Mask> out;
    Mask seen = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (contains(seen, v)) continue;
        Mask comp = bit(v);
        while (true) {
            Mask grown = comp | g.neighbourhood_of_set(comp);
            if (grown == comp) break;
            comp = grown;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return g.order() == 0 || components(g).size() == 1;
}

/// Chordality by greedy simplicial elimination: a graph is chordal iff
/// repeatedly deleting a vertex whose neighbourhood is a clique empties it.
inline bool is_chordal(const Graph& g) {
    std::vector<Mask> adj;
    adj.reserve(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) adj.push_back(g.neighbourhood(v));
    Mask alive = g.vertex_mask();
    auto clique = [&](Mask s) {
        bool ok = true;
        for_each_bit(s, [&](int v) {
            if ((s & ~bit(v) & ~adj[static_cast<size_t>(v)]) != 0) ok = false;
        });
        return ok;
    };
    while (alive) {
        int found = -1;
        for_each_bit(alive, [&](int v) {
            if (found < 0 && clique(adj[static_cast<size_t>(v)] & alive)) found = v;
        });
        if (found < 0) return false;
        alive &= ~bit(found);
    }
    return true;
}

inline bool is_cochordal(const Graph& g) { return is_chordal(g.complement()); }

/// Length of a shortest cycle; std::nullopt for forests. The sentinel is the
/// result type itself, never a magic number.
inline std::optional<int> girth(const Graph& g) {
    int n = g.order();
    int best = -1;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<size_t>(n), -1), parent(static_cast<size_t>(n), -1);
        dist[static_cast<size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : mask_to_vector(g.neighbourhood(u))) {
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    parent[static_cast<size_t>(w)] = u;
                    q.push(w);
                } else if (w != parent[static_cast<size_t>(u)]) {
                    int len = dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(w)] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

inline bool is_bipartite_graph(const Graph& g, std::vector<int>* side_out = nullptr) {
    std::vector<int> side(static_cast<size_t>(g.order()), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[static_cast<size_t>(s)] >= 0) continue;
        side[static_cast<size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : mask_to_vector(g.neighbourhood(u))) {
                if (side[static_cast<size_t>(w)] < 0) {
                    side[static_cast<size_t>(w)] = 1 - side[static_cast<size_t>(u)];
                    q.push(w);
                } else if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    if (side_out) *side_out = std::move(side);
    return true;
}

// ---------------------------------------------------------------------------
// Canonical form and isomorphism. Canonical-form search with invariant-class
// pruning; adequate well below ~20 vertices, which covers every use here.
// ---------------------------------------------------------------------------

namespace detail {

/// Iteration-refined vertex keys (degree, then sorted neighbour keys, twice).
/// Keys are isomorphism-invariant, so restricting candidate orderings to
/// key-sorted ones keeps the minimum well defined across isomorphic graphs.
inline std::vector<std::uint64_t> vertex_keys(const Graph& g) {
    int n = g.order();
    std::vector<std::uint64_t> key(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) key[static_cast<size_t>(v)] = static_cast<std::uint64_t>(g.degree(v));
    for (int round = 0; round < 2; ++round) {
        std::vector<std::uint64_t> next(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<std::uint64_t> nb;
            for_each_bit(g.neighbourhood(v), [&](int w) { nb.push_back(key[static_cast<size_t>(w)]); });
            std::sort(nb.begin(), nb.end());
            std::uint64_t h = key[static_cast<size_t>(v)] * 1000003u + 0x9e3779b97f4a7c15ull;
            for (auto x : nb) h = h * 1099511628211ull + x + 1;
            next[static_cast<size_t>(v)] = h;
        }
        key = std::move(next);
    }
    return key;
}

struct CanonState {
    const Graph* g;
    std::vector<int> class_of_position;       // key class required at each position
    std::vector<std::vector<int>> class_members;
    std::vector<std::uint64_t> best;          // per-position adjacency row words
    std::vector<std::uint64_t> current;
    std::vector<int> placed;                  // original vertex at each position
    std::vector<char> used;
    bool have_best = false;

    // eq_prefix: current[0..pos-1] equalled best's prefix when this frame was
    // entered. Pruning on row > best[pos] is only done under that flag; it
    // stays safe even if best improves underneath, because such a subtree can
    // no longer contain the minimum. Leaves always do a full comparison.
    void dfs(int pos, bool eq_prefix) {
        int n = g->order();
        if (pos == n) {
            if (!have_best ||
                std::lexicographical_compare(current.begin(), current.end(),
                                             best.begin(), best.end())) {
                best = current;
                have_best = true;
            }
            return;
        }
        // Candidates: unused vertices of this position's key class, with
        // twin pruning (equal open or closed neighbourhoods give an
        // automorphism swapping the pair, so only the first is tried).
        std::vector<int> tried;
        for (int v : class_members[static_cast<size_t>(class_of_position[static_cast<size_t>(pos)])]) {
            if (used[static_cast<size_t>(v)]) continue;
            Mask nv = g->neighbourhood(v);
            bool twin = false;
            for (int w : tried) {
                Mask nw = g->neighbourhood(w);
                if (nw == nv || (nw | bit(w)) == (nv | bit(v))) { twin = true; break; }
            }
            if (twin) continue;
            tried.push_back(v);

            std::uint64_t row = 0;
            for (int p = 0; p < pos; ++p)
                if (contains(nv, placed[static_cast<size_t>(p)])) row |= std::uint64_t{1} << p;
            bool child_eq = false;
            if (have_best && eq_prefix) {
                if (row > best[static_cast<size_t>(pos)]) continue;
                child_eq = row == best[static_cast<size_t>(pos)];
            }
            current[static_cast<size_t>(pos)] = row;
            placed[static_cast<size_t>(pos)] = v;
            used[static_cast<size_t>(v)] = 1;
            dfs(pos + 1, child_eq);
            used[static_cast<size_t>(v)] = 0;
        }
    }
};

}  // namespace detail

/// Canonical form: order plus the lexicographically smallest per-position
/// adjacency row words over all key-sorted vertex orderings. Equal forms
/// exactly characterise isomorphism (for graphs of equal order).
inline std::vector<std::uint64_t> canonical_form(const Graph& g) {
    int n = g.order();
    auto keys = detail::vertex_keys(g);
    // class ids sorted by (class key, class size) for a stable position layout
    std::vector<std::uint64_t> sorted_keys = keys;
    std::sort(sorted_keys.begin(), sorted_keys.end());
    sorted_keys.erase(std::unique(sorted_keys.begin(), sorted_keys.end()), sorted_keys.end());
    detail::CanonState st;
    st.g = &g;
    st.class_members.resize(sorted_keys.size());
    for (int v = 0; v < n; ++v) {
        size_t c = static_cast<size_t>(
            std::lower_bound(sorted_keys.begin(), sorted_keys.end(), keys[static_cast<size_t>(v)]) -
            sorted_keys.begin());
        st.class_members[c].push_back(v);
    }
    for (size_t c = 0; c < st.class_members.size(); ++c)
        for (size_t i = 0; i < st.class_members[c].size(); ++i)
            st.class_of_position.push_back(static_cast<int>(c));
    st.best.assign(static_cast<size_t>(n), ~std::uint64_t{0});
    st.current.assign(static_cast<size_t>(n), 0);
    st.placed.assign(static_cast<size_t>(n), -1);
    st.used.assign(static_cast<size_t>(n), 0);
    if (n > 0) st.dfs(0, false);
    std::vector<std::uint64_t> form;
    form.push_back(static_cast<std::uint64_t>(n));
    for (auto w : st.best) form.push_back(w);
    return form;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    auto dg = detail::vertex_keys(g), dh = detail::vertex_keys(h);
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_form(g) == canonical_form(h);
}

/// Inverse of subdivision up to isomorphism: if some side consists entirely
/// of degree-2 vertices and the graph is C_4-free, rebuild a graph G with
/// S(G) isomorphic to the input; otherwise none.
inline std::optional<Graph> recognize_subdivision(const BipartiteGraph& b) {
    // C_4 in a bipartite graph = two vertices on one side with two common
    // neighbours.
    int n = b.graph.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (popcount(b.graph.neighbourhood(u) & b.graph.neighbourhood(v)) >= 2)
                return std::nullopt;
    for (int edge_side = 1; edge_side >= 0; --edge_side) {
        Mask es = b.side_mask(edge_side);
        bool all_deg2 = true;
        for_each_bit(es, [&](int v) {
            if (b.graph.degree(v) != 2) all_deg2 = false;
        });
        if (!all_deg2) continue;
        Mask vs = b.side_mask(1 - edge_side);
        std::array<int, kMaxGround> new_id{};
        int k = 0;
        for_each_bit(vs, [&](int v) { new_id[static_cast<size_t>(v)] = k++; });
        std::vector<std::pair<int, int>> edges;
        bool ok = true;
        for_each_bit(es, [&](int f) {
            auto ends = mask_to_vector(b.graph.neighbourhood(f));
            if (ends.size() != 2) { ok = false; return; }
            edges.emplace_back(new_id[static_cast<size_t>(ends[0])],
                               new_id[static_cast<size_t>(ends[1])]);
        });
        if (!ok) continue;
        // C_4-freeness rules out duplicate reconstructed edges.
        return Graph::from_edges(k, edges);
    }
    return std::nullopt;
}

}  // namespace reglab

#endif  // REGLAB_GRAPH_HPP
