#ifndef REPCOL_STRUCTURE_HPP
#define REPCOL_STRUCTURE_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "repcol/graph.hpp"
#include "repcol/matching.hpp"

namespace repcol {

// ---------------------------------------------------------------------------
// fixed patterns (subgraph containment, not induced)

enum class Pattern { triangle, K4, K5, paw, diamond, kite, claw };

inline constexpr std::array<Pattern, 7> kAllPatterns = {Pattern::triangle, Pattern::K4,   Pattern::K5,  Pattern::paw,
                                                        Pattern::diamond,  Pattern::kite, Pattern::claw};

inline std::string_view pattern_name(Pattern p)
{
    switch (p) {
        case Pattern::triangle: return "triangle";
        case Pattern::K4: return "K4";
        case Pattern::K5: return "K5";
        case Pattern::paw: return "paw";
        case Pattern::diamond: return "diamond";
        case Pattern::kite: return "kite";
        case Pattern::claw: return "claw";
    }
    return "?";
}

/**
 * The pattern as a graph. Vertex numbering puts every vertex after one of
 * its neighbors, which the embedding search relies on.
 *   paw:     triangle 0,1,2 plus pendant 3 on 2
 *   diamond: K4 on 0..3 minus the edge 03
 *   kite:    paw with the pendant path extended, 2-3-4
 *   claw:    center 0, leaves 1,2,3
 */
inline Graph pattern_graph(Pattern p)
{
    switch (p) {
        case Pattern::triangle: return Graph(3, {{0, 1}, {0, 2}, {1, 2}});
        case Pattern::K4: return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        case Pattern::K5: {
            Graph g(5);
            for (int a = 0; a < 5; ++a)
                for (int b = a + 1; b < 5; ++b) g.add_edge(a, b);
            return g;
        }
        case Pattern::paw: return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        case Pattern::diamond: return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
        case Pattern::kite: return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
        case Pattern::claw: return Graph(4, {{0, 1}, {0, 2}, {0, 3}});
    }
    return Graph();
}

namespace detail {

inline bool extend_embedding(const Graph& host, const Graph& pat, std::vector<Vertex>& image, std::vector<char>& used,
                             const std::vector<int>& host_degree)
{
    const int k = static_cast<int>(image.size());
    if (k == pat.order()) return true;
    int need = pat.degree(k);
    for (Vertex h = 0; h < host.order(); ++h) {
        if (used[static_cast<std::size_t>(h)] || host_degree[static_cast<std::size_t>(h)] < need) continue;
        bool ok = true;
        for (Vertex q = 0; q < k && ok; ++q)
            if (pat.adjacent(q, k) && !host.adjacent(image[static_cast<std::size_t>(q)], h)) ok = false;
        if (!ok) continue;
        image.push_back(h);
        used[static_cast<std::size_t>(h)] = 1;
        if (extend_embedding(host, pat, image, used, host_degree)) return true;
        used[static_cast<std::size_t>(h)] = 0;
        image.pop_back();
    }
    return false;
}

}  // namespace detail

/** True iff `pattern` embeds into `host` as a (not necessarily induced) subgraph. */
inline bool contains_subgraph(const Graph& host, const Graph& pattern)
{
    if (pattern.order() > host.order() || pattern.size() > host.size()) return false;
    std::vector<int> deg(static_cast<std::size_t>(host.order()));
    for (Vertex v = 0; v < host.order(); ++v) deg[static_cast<std::size_t>(v)] = host.degree(v);
    std::vector<Vertex> image;
    std::vector<char> used(static_cast<std::size_t>(host.order()), 0);
    return detail::extend_embedding(host, pattern, image, used, deg);
}

inline bool contains_subgraph(const Graph& host, Pattern p)
{
    return contains_subgraph(host, pattern_graph(p));
}

// ---------------------------------------------------------------------------
// exact invariants

/** Default vertex cap for exact stability / chromatic numbers. */
inline constexpr int kExactInvariantCap = 24;

namespace detail {

inline void stable_search(const std::vector<std::uint64_t>& nbr, std::uint64_t cand, int size, int& best)
{
    if (cand == 0) {
        best = std::max(best, size);
        return;
    }
    if (size + std::popcount(cand) <= best) return;
    int v = std::countr_zero(cand);
    std::uint64_t bit = std::uint64_t{1} << v;
    stable_search(nbr, cand & ~bit & ~nbr[static_cast<std::size_t>(v)], size + 1, best);
    // Skipping v only helps if some neighbor of v inside cand can be taken instead.
    if (nbr[static_cast<std::size_t>(v)] & cand) stable_search(nbr, cand & ~bit, size, best);
}

class DsaturColoring
{
    public:
        explicit DsaturColoring(const Graph& g)
            : g_(g), n_(g.order()), color_(static_cast<std::size_t>(n_), 0)
        {
        }

        int solve()
        {
            if (n_ == 0) return 0;
            best_ = n_;
            search(0, 0);
            return best_;
        }

    private:
        int saturation(Vertex v) const
        {
            std::uint64_t seen = 0;
            for (Vertex w = 0; w < n_; ++w)
                if (color_[static_cast<std::size_t>(w)] && g_.adjacent(v, w)) seen |= std::uint64_t{1} << color_[static_cast<std::size_t>(w)];
            return std::popcount(seen);
        }

        void search(int colored, int used)
        {
            if (used >= best_) return;
            if (colored == n_) {
                best_ = used;
                return;
            }
            Vertex pick = -1;
            int pick_sat = -1, pick_deg = -1;
            for (Vertex v = 0; v < n_; ++v) {
                if (color_[static_cast<std::size_t>(v)]) continue;
                int s = saturation(v), d = g_.degree(v);
                if (s > pick_sat || (s == pick_sat && d > pick_deg)) {
                    pick = v;
                    pick_sat = s;
                    pick_deg = d;
                }
            }
            for (int c = 1; c <= std::min(used + 1, best_ - 1); ++c) {
                bool ok = true;
                for (Vertex w = 0; w < n_ && ok; ++w)
                    if (color_[static_cast<std::size_t>(w)] == c && g_.adjacent(pick, w)) ok = false;
                if (!ok) continue;
                color_[static_cast<std::size_t>(pick)] = c;
                search(colored + 1, std::max(used, c));
                color_[static_cast<std::size_t>(pick)] = 0;
            }
        }

        const Graph& g_;
        int n_;
        std::vector<int> color_;
        int best_ = 0;
};

}  // namespace detail

/** Exact α(G) by branch and bound; throws CapExceeded above `cap` vertices. */
inline int stability_number(const Graph& g, int cap = kExactInvariantCap)
{
    if (g.order() > cap || g.order() > 64)
        throw CapExceeded("stability_number: n = " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
    std::vector<std::uint64_t> nbr(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) nbr[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
    std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    int best = 0;
    detail::stable_search(nbr, all, 0, best);
    return best;
}

/** Exact χ(G) by DSATUR branch and bound; throws CapExceeded above `cap` vertices. */
inline int chromatic_number(const Graph& g, int cap = kExactInvariantCap)
{
    if (g.order() > cap || g.order() > 63)
        throw CapExceeded("chromatic_number: n = " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
    return detail::DsaturColoring(g).solve();
}

// ---------------------------------------------------------------------------
// cliques

namespace detail {

inline void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x, std::vector<VertexSet>& out)
{
    if (p.empty() && x.empty()) {
        VertexSet c = r;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
        return;
    }
    // pivot: vertex of P ∪ X with most neighbors in P
    Vertex pivot = -1;
    int most = -1;
    for (const VertexSet* s : {&p, &x})
        for (Vertex u : *s) {
            int cnt = 0;
            for (Vertex v : p) cnt += g.adjacent(u, v) ? 1 : 0;
            if (cnt > most) {
                most = cnt;
                pivot = u;
            }
        }
    VertexSet candidates;
    for (Vertex v : p)
        if (!g.adjacent(pivot, v)) candidates.push_back(v);
    for (Vertex v : candidates) {
        VertexSet np, nx;
        for (Vertex w : p)
            if (g.adjacent(v, w)) np.push_back(w);
        for (Vertex w : x)
            if (g.adjacent(v, w)) nx.push_back(w);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(np), std::move(nx), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

}  // namespace detail

/** All maximal cliques of G[within], each sorted, listed lexicographically. */
inline std::vector<VertexSet> maximal_cliques(const Graph& g, const VertexSet& within)
{
    std::vector<VertexSet> out;
    if (within.empty()) return out;
    for (Vertex v : within) g.check_vertex(v);
    VertexSet p = within;
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    VertexSet r;
    detail::bron_kerbosch(g, r, std::move(p), {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<VertexSet> maximal_cliques(const Graph& g)
{
    return maximal_cliques(g, all_vertices(g));
}

// ---------------------------------------------------------------------------
// connectivity and matchability

inline bool is_connected(const Graph& g, const std::vector<char>& removed = {})
{
    auto gone = [&](Vertex v) { return !removed.empty() && removed[static_cast<std::size_t>(v)]; };
    Vertex start = -1;
    int alive = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!gone(v)) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w = 0; w < g.order(); ++w)
            if (!gone(w) && !seen[static_cast<std::size_t>(w)] && g.adjacent(v, w)) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == alive;
}

/** Connected components, each sorted, ordered by smallest member. */
inline std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        VertexSet members{s};
        comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (Vertex w = 0; w < g.order(); ++w)
                if (comp[static_cast<std::size_t>(w)] < 0 && g.adjacent(members[i], w)) {
                    comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

/** Connected, at least 3 vertices, and no cut vertex. */
inline bool is_2connected(const Graph& g)
{
    if (g.order() < 3 || !is_connected(g)) return false;
    std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        removed[static_cast<std::size_t>(v)] = 1;
        bool ok = is_connected(g, removed);
        removed[static_cast<std::size_t>(v)] = 0;
        if (!ok) return false;
    }
    return true;
}

/** G - u has a perfect matching for every vertex u. */
inline bool is_hypomatchable(const Graph& g)
{
    if (g.order() % 2 == 0) return false;
    for (Vertex u = 0; u < g.order(); ++u) {
        VertexSet rest;
        for (Vertex v = 0; v < g.order(); ++v)
            if (v != u) rest.push_back(v);
        Graph h = induced_subgraph(g, rest);
        if (2 * static_cast<int>(maximum_matching(h).size()) != h.order()) return false;
    }
    return true;
}

/** Chordless cycle on all vertices of g with length >= 4. */
inline bool is_hole(const Graph& g)
{
    if (g.order() < 4 || static_cast<int>(g.size()) != g.order() || !is_connected(g)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

// ---------------------------------------------------------------------------
// co-{K4, diamond, paw}-free structure

/**
 * G = G[rest] joined completely with stable triples. `rest` has stability
 * number at most 2.
 */
struct CojoinDecomposition
{
    VertexSet rest;
    std::vector<std::array<Vertex, 3>> triples;  // each ascending by id, listed by smallest member
};

/** True iff complement(G) has none of K4, paw, diamond as a subgraph. */
inline bool is_co_k4_diamond_paw_free(const Graph& g)
{
    Graph co = complement(g);
    return !contains_subgraph(co, Pattern::K4) && !contains_subgraph(co, Pattern::paw) &&
           !contains_subgraph(co, Pattern::diamond);
}

/**
 * Peels off the stable triples of a co-{K4, diamond, paw}-free graph. When
 * the complement is paw-free every triangle of the complement is a whole
 * connected component of it, so the triples are exactly the triangle
 * components of the complement. Returns nullopt when the class condition
 * fails.
 */
inline std::optional<CojoinDecomposition> cojoin_decompose(const Graph& g)
{
    if (!is_co_k4_diamond_paw_free(g)) return std::nullopt;
    Graph co = complement(g);
    CojoinDecomposition d;
    std::vector<char> in_triple(static_cast<std::size_t>(g.order()), 0);
    for (const VertexSet& comp : connected_components(co)) {
        if (comp.size() == 3 && co.is_clique(comp)) {
            d.triples.push_back({comp[0], comp[1], comp[2]});
            for (Vertex v : comp) in_triple[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (!in_triple[static_cast<std::size_t>(v)]) d.rest.push_back(v);
    return d;
}

}  // namespace repcol

#endif  // REPCOL_STRUCTURE_HPP
