#ifndef REPCOL_REP_GRAPH_HPP
#define REPCOL_REP_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "repcol/graph.hpp"
#include "repcol/ordering.hpp"
#include "repcol/structure.hpp"

namespace repcol {

/**
 * Oriented non-edge of G: `tail` precedes `head`. As a model variable it
 * reads "tail represents the color class of head". A diagonal variable of
 * the original model is written with tail == head.
 */
struct Arc
{
    Vertex tail = 0;
    Vertex head = 0;

    Edge pair() const { return Edge(tail, head); }
    bool diagonal() const { return tail == head; }

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/**
 * The auxiliary graph whose stable sets are the colorings of G. Arcs are
 * listed in the canonical order of the underlying unordered non-edges
 * ({min, max} lexicographic), so arc i is also edge i of complement(G)
 * regardless of the ordering. `adjacency` is a graph on arc indices.
 */
struct RepGraph
{
    int n = 0;  // order of G
    std::vector<Arc> arcs;
    Graph adjacency;

    int size() const noexcept { return static_cast<int>(arcs.size()); }

    /** Position of the arc on the non-edge {a, b} (either orientation), or -1. */
    int index_of(Vertex a, Vertex b) const
    {
        Edge key(a, b);
        auto it = std::lower_bound(arcs.begin(), arcs.end(), key,
                                   [](const Arc& x, const Edge& k) { return x.pair() < k; });
        return (it != arcs.end() && it->pair() == key) ? static_cast<int>(it - arcs.begin()) : -1;
    }
};

/** Non-edges of g oriented by ord, in canonical pair order. */
inline std::vector<Arc> oriented_nonedges(const Graph& g, const VertexOrdering& ord)
{
    std::vector<Arc> arcs;
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
            if (!g.adjacent(a, b)) arcs.push_back(ord.precedes(a, b) ? Arc{a, b} : Arc{b, a});
    return arcs;
}

/**
 * Two arcs (u,v), (u',v') are adjacent iff they share a row of the compact
 * model:
 *   (i)   v == v'                      both in the lower sum of head v
 *   (ii)  v == u' or v' == u           lower sum and clique sum of that vertex
 *   (iii) u == u' and vv' in E(G)      clique sum of u over a clique holding v, v'
 * Vertices with empty upper non-neighborhood keep their K = {} row, which is
 * covered by (i).
 */
inline RepGraph build_rep(const Graph& g, const VertexOrdering& ord)
{
    if (ord.size() != g.order()) throw InvalidInput("ordering size does not match the graph");
    RepGraph r;
    r.n = g.order();
    r.arcs = oriented_nonedges(g, ord);
    r.adjacency = Graph(static_cast<int>(r.arcs.size()));
    for (std::size_t i = 0; i < r.arcs.size(); ++i)
        for (std::size_t j = i + 1; j < r.arcs.size(); ++j) {
            const Arc& a = r.arcs[i];
            const Arc& b = r.arcs[j];
            bool same_head = a.head == b.head;
            bool chained = a.head == b.tail || b.head == a.tail;
            bool same_tail_linked = a.tail == b.tail && g.adjacent(a.head, b.head);
            if (same_head || chained || same_tail_linked)
                r.adjacency.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    return r;
}

/** Line graph with vertex i standing for `labels[i]`, the i-th edge of h. */
struct LineGraph
{
    Graph graph;
    std::vector<Edge> labels;
};

inline LineGraph line_graph(const Graph& h)
{
    LineGraph l;
    l.labels = h.edges();
    l.graph = Graph(static_cast<int>(l.labels.size()));
    for (std::size_t i = 0; i < l.labels.size(); ++i)
        for (std::size_t j = i + 1; j < l.labels.size(); ++j) {
            const Edge& a = l.labels[i];
            const Edge& b = l.labels[j];
            if (a.has(b.u) || a.has(b.v)) l.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    return l;
}

/**
 * V(R) equals the edge set of complement(G) and every edge of R joins arcs
 * that share an endpoint.
 */
inline bool is_spanning_subgraph_of_linegraph(const RepGraph& r, const Graph& g, const VertexOrdering& ord)
{
    if (r.n != g.order()) return false;
    Graph co = complement(g);
    if (co.edges().size() != r.arcs.size()) return false;
    for (std::size_t i = 0; i < r.arcs.size(); ++i) {
        const Arc& a = r.arcs[i];
        if (a.pair() != co.edges()[i] || !ord.precedes(a.tail, a.head)) return false;
    }
    if (r.adjacency.order() != static_cast<int>(r.arcs.size())) return false;
    for (const Edge& e : r.adjacency.edges()) {
        Edge x = r.arcs[static_cast<std::size_t>(e.u)].pair();
        Edge y = r.arcs[static_cast<std::size_t>(e.v)].pair();
        if (!(x.has(y.u) || x.has(y.v))) return false;
    }
    return true;
}

/** True iff R's adjacency coincides with L(complement(G)) under arc i <-> edge i. */
inline bool rep_equals_linegraph(const RepGraph& r, const Graph& g)
{
    return r.adjacency == line_graph(complement(g)).graph;
}

/** Default cap on n for sweeps over all n! orderings. */
inline constexpr int kOrderingSweepCap = 8;

/** Calls fn(ord) for every ordering in lexicographic sequence order; stops early when fn returns false. */
template <typename Fn>
void for_each_ordering(int n, Fn&& fn, int cap = kOrderingSweepCap)
{
    if (n > cap)
        throw CapExceeded("ordering sweep: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<Vertex> seq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i;
    do {
        if (!fn(VertexOrdering::from_sequence(seq))) return;
    } while (std::next_permutation(seq.begin(), seq.end()));
}

/** build_rep(G, ord) == L(complement(G)) for every ordering. */
inline bool rep_equals_linegraph_all_orderings(const Graph& g, int cap = kOrderingSweepCap)
{
    Graph target = line_graph(complement(g)).graph;
    bool all = true;
    for_each_ordering(g.order(), [&](const VertexOrdering& ord) {
        all = build_rep(g, ord).adjacency == target;
        return all;
    }, cap);
    return all;
}

// ---------------------------------------------------------------------------
// claw-free / quasi-line

/** No induced K_{1,3}: no vertex has three pairwise non-adjacent neighbors. */
inline bool is_claw_free(const Graph& h)
{
    for (Vertex v = 0; v < h.order(); ++v) {
        VertexSet nb = h.neighbors(v);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (h.adjacent(nb[a], nb[b])) continue;
                for (std::size_t c = b + 1; c < nb.size(); ++c)
                    if (!h.adjacent(nb[a], nb[c]) && !h.adjacent(nb[b], nb[c])) return false;
            }
    }
    return true;
}

/** Bipartiteness of the graph on `set` whose edges are the non-adjacent pairs of h. */
inline bool complement_is_bipartite(const Graph& h, const VertexSet& set)
{
    std::vector<int> side(set.size(), -1);
    for (std::size_t s = 0; s < set.size(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < set.size(); ++j) {
                if (j == i || h.adjacent(set[i], set[j])) continue;
                if (side[j] < 0) {
                    side[j] = 1 - side[i];
                    stack.push_back(j);
                } else if (side[j] == side[i]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/** Every neighborhood splits into two cliques. */
inline bool is_quasi_line(const Graph& h)
{
    for (Vertex v = 0; v < h.order(); ++v)
        if (!complement_is_bipartite(h, h.neighbors(v))) return false;
    return true;
}

/** Result of a property sweep over all orderings. */
struct OrderingSweep
{
    bool always = true;
    std::optional<VertexOrdering> fails_on;
};

template <typename Property>
OrderingSweep rep_property_all_orderings(const Graph& g, Property&& prop, int cap = kOrderingSweepCap)
{
    OrderingSweep result;
    for_each_ordering(g.order(), [&](const VertexOrdering& ord) {
        if (prop(build_rep(g, ord).adjacency)) return true;
        result.always = false;
        result.fails_on = ord;
        return false;
    }, cap);
    return result;
}

inline OrderingSweep quasiline_status_all_orderings(const Graph& g, int cap = kOrderingSweepCap)
{
    return rep_property_all_orderings(g, [](const Graph& r) { return is_quasi_line(r); }, cap);
}

inline OrderingSweep clawfree_status_all_orderings(const Graph& g, int cap = kOrderingSweepCap)
{
    return rep_property_all_orderings(g, [](const Graph& r) { return is_claw_free(r); }, cap);
}

// ---------------------------------------------------------------------------
// auxiliary graph for co-{K4, diamond, paw}-free graphs

/**
 * H = complement(G[rest]) plus, for each stable triple u < v < w (under the
 * ordering), the path u' - v - w - u'' with fresh vertices u' = n + 2i and
 * u'' = n + 2i + 1. Vertices of `rest` keep their ids, so H has n + 2k
 * vertices and each triple's u is isolated in H. `edge_to_arc` is the
 * natural correspondence between E(H) and the arcs of G.
 */
struct CoPawAuxiliary
{
    Graph graph;
    std::map<Edge, Arc> edge_to_arc;
    CojoinDecomposition decomposition;
};

inline std::optional<CoPawAuxiliary> build_H_G(const Graph& g, const VertexOrdering& ord)
{
    auto dec = cojoin_decompose(g);
    if (!dec) return std::nullopt;
    const int n = g.order();
    const int k = static_cast<int>(dec->triples.size());
    CoPawAuxiliary aux;
    aux.graph = Graph(n + 2 * k);
    aux.decomposition = *dec;
    for (std::size_t i = 0; i < dec->rest.size(); ++i)
        for (std::size_t j = i + 1; j < dec->rest.size(); ++j) {
            Vertex a = dec->rest[i], b = dec->rest[j];
            if (g.adjacent(a, b)) continue;
            aux.graph.add_edge(a, b);
            aux.edge_to_arc[Edge(a, b)] = ord.precedes(a, b) ? Arc{a, b} : Arc{b, a};
        }
    for (int i = 0; i < k; ++i) {
        std::array<Vertex, 3> t = dec->triples[static_cast<std::size_t>(i)];
        std::sort(t.begin(), t.end(), [&](Vertex a, Vertex b) { return ord.precedes(a, b); });
        const Vertex u = t[0], v = t[1], w = t[2];
        const Vertex u1 = n + 2 * i, u2 = n + 2 * i + 1;
        aux.graph.add_edge(u1, v);
        aux.graph.add_edge(v, w);
        aux.graph.add_edge(w, u2);
        aux.edge_to_arc[Edge(u1, v)] = Arc{u, v};
        aux.edge_to_arc[Edge(v, w)] = Arc{v, w};
        aux.edge_to_arc[Edge(w, u2)] = Arc{u, w};
    }
    return aux;
}

/**
 * L(H) and R agree under the natural edge-to-arc map: the map is a bijection
 * onto the arcs of R and preserves adjacency in both directions.
 */
inline bool linegraph_matches_rep(const CoPawAuxiliary& aux, const RepGraph& r)
{
    LineGraph l = line_graph(aux.graph);
    if (static_cast<int>(l.labels.size()) != r.size()) return false;
    std::vector<int> to_arc(l.labels.size(), -1);
    std::vector<char> hit(static_cast<std::size_t>(r.size()), 0);
    for (std::size_t i = 0; i < l.labels.size(); ++i) {
        auto it = aux.edge_to_arc.find(l.labels[i]);
        if (it == aux.edge_to_arc.end()) return false;
        int idx = r.index_of(it->second.tail, it->second.head);
        if (idx < 0 || hit[static_cast<std::size_t>(idx)] || r.arcs[static_cast<std::size_t>(idx)] != it->second) return false;
        hit[static_cast<std::size_t>(idx)] = 1;
        to_arc[i] = idx;
    }
    for (std::size_t i = 0; i < l.labels.size(); ++i)
        for (std::size_t j = i + 1; j < l.labels.size(); ++j)
            if (l.graph.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) !=
                r.adjacency.adjacent(to_arc[i], to_arc[j]))
                return false;
    return true;
}

}  // namespace repcol

#endif  // REPCOL_REP_GRAPH_HPP
