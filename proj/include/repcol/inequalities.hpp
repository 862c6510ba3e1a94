#ifndef REPCOL_INEQUALITIES_HPP
#define REPCOL_INEQUALITIES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "repcol/formulation.hpp"
#include "repcol/lp.hpp"
#include "repcol/rep_graph.hpp"
#include "repcol/structure.hpp"

namespace repcol {

// ---------------------------------------------------------------------------
// Edmonds' matching system

/**
 * Degree rows, odd-set rows for odd |S| in [3, odd_set_cap], and
 * nonnegativity, over the edges of h (edge {a, b} keyed as Arc{a, b}, a < b).
 * Rows with empty support are omitted.
 */
inline std::vector<LinearInequality> matching_system(const Graph& h, int odd_set_cap)
{
    std::vector<LinearInequality> out;
    for (Vertex u = 0; u < h.order(); ++u) {
        LinearInequality row;
        for (Vertex v : h.neighbors(u)) row.coeffs[Arc{std::min(u, v), std::max(u, v)}] = 1;
        if (row.coeffs.empty()) continue;
        row.rhs = 1;
        row.family = Family::clique;
        row.label = "deg_" + std::to_string(u + 1);
        out.push_back(std::move(row));
    }
    const int top = std::min(odd_set_cap, h.order());
    for (int size = 3; size <= top; size += 2) {
        // subsets of the given size in lexicographic order
        std::vector<int> pick(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
        for (;;) {
            LinearInequality row;
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j) {
                    Vertex a = pick[static_cast<std::size_t>(i)], b = pick[static_cast<std::size_t>(j)];
                    if (h.adjacent(a, b)) row.coeffs[Arc{a, b}] = 1;
                }
            if (!row.coeffs.empty()) {
                row.rhs = Rational((size - 1) / 2);
                row.family = Family::odd_set;
                row.label = "odd";
                for (int v : pick) row.label += "_" + std::to_string(v + 1);
                out.push_back(std::move(row));
            }
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == h.order() - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    for (const Edge& e : h.edges()) {
        LinearInequality row;
        row.coeffs[Arc{e.u, e.v}] = -1;
        row.rhs = 0;
        row.family = Family::nonneg;
        row.label = "nn_" + std::to_string(e.u + 1) + "_" + std::to_string(e.v + 1);
        out.push_back(std::move(row));
    }
    return out;
}

/** Re-keys a system written over the edges of complement(G) onto the arcs under `ord`. */
inline std::vector<LinearInequality> orient_on_arcs(const std::vector<LinearInequality>& system, const VertexOrdering& ord)
{
    std::vector<LinearInequality> out = system;
    for (LinearInequality& row : out) {
        std::map<Arc, Rational> keyed;
        for (const auto& [a, c] : row.coeffs)
            keyed[a.diagonal() || ord.precedes(a.tail, a.head) ? a : Arc{a.head, a.tail}] = c;
        row.coeffs = std::move(keyed);
    }
    return out;
}

/** Re-keys a system over the edges of H (co-paw auxiliary graph) onto the arcs of G. */
inline std::vector<LinearInequality> map_to_arcs(const std::vector<LinearInequality>& system, const CoPawAuxiliary& aux)
{
    std::vector<LinearInequality> out = system;
    for (LinearInequality& row : out) {
        std::map<Arc, Rational> keyed;
        for (const auto& [a, c] : row.coeffs) {
            auto it = aux.edge_to_arc.find(Edge(a.tail, a.head));
            if (it == aux.edge_to_arc.end()) throw InvalidInput("inequality uses a pair that is not an edge of H");
            keyed[it->second] = c;
        }
        row.coeffs = std::move(keyed);
    }
    return out;
}

// ---------------------------------------------------------------------------
// internal inequalities

/** sum over arcs inside S of x <= |S| - chi(G[S]). */
inline LinearInequality internal_inequality(const Graph& g, const VertexOrdering& ord, VertexSet s,
                                            int chi_cap = kExactInvariantCap)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Vertex v : s) g.check_vertex(v);
    LinearInequality row;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            Vertex a = s[i], b = s[j];
            if (g.adjacent(a, b)) continue;
            row.coeffs[ord.precedes(a, b) ? Arc{a, b} : Arc{b, a}] = 1;
        }
    row.rhs = static_cast<int>(s.size()) - chromatic_number(induced_subgraph(g, s), chi_cap);
    row.family = Family::internal;
    row.label = "int";
    for (Vertex v : s) row.label += "_" + std::to_string(v + 1);
    return row;
}

enum class FacetCertificate { odd_hole, odd_antihole, alpha2_hypomatchable, none };

inline std::string_view certificate_name(FacetCertificate c)
{
    switch (c) {
        case FacetCertificate::odd_hole: return "odd_hole";
        case FacetCertificate::odd_antihole: return "odd_antihole";
        case FacetCertificate::alpha2_hypomatchable: return "alpha2_hypomatchable";
        case FacetCertificate::none: return "none";
    }
    return "none";
}

/** First known sufficient condition for the internal inequality over S to be a facet. */
inline FacetCertificate internal_facet_sufficient(const Graph& g, const VertexSet& s)
{
    Graph sub = induced_subgraph(g, s);
    if (sub.order() >= 5 && sub.order() % 2 == 1 && is_hole(sub)) return FacetCertificate::odd_hole;
    Graph co = complement(sub);
    if (co.order() >= 5 && co.order() % 2 == 1 && is_hole(co)) return FacetCertificate::odd_antihole;
    if (sub.order() > 0 && sub.order() <= kExactInvariantCap && stability_number(sub) <= 2 && is_2connected(co) &&
        is_hypomatchable(co))
        return FacetCertificate::alpha2_hypomatchable;
    return FacetCertificate::none;
}

// ---------------------------------------------------------------------------
// clique-family inequalities

/**
 * (p-r-1) sum_{V_{p-1}} x + (p-r) sum_{V_{>=p}} x <= (p-r) floor(t/p), with
 * t = |F|, r = t mod p and V_k the vertices covered by k (or >= p) members.
 * Coefficients are indexed by the vertices of h.
 */
inline DenseRow clique_family_row(const Graph& h, const std::vector<VertexSet>& family, int p)
{
    const int t = static_cast<int>(family.size());
    if (p < 1 || p > t) throw InvalidInput("clique-family: need 1 <= p <= |F|");
    std::vector<int> cover(static_cast<std::size_t>(h.order()), 0);
    for (const VertexSet& k : family) {
        for (Vertex v : k) h.check_vertex(v);
        if (!h.is_clique(k)) throw InvalidInput("clique-family: a member of F is not a clique");
        for (Vertex v : k) ++cover[static_cast<std::size_t>(v)];
    }
    const int r = t % p;
    DenseRow row;
    row.a.assign(static_cast<std::size_t>(h.order()), 0);
    for (Vertex v = 0; v < h.order(); ++v) {
        int c = cover[static_cast<std::size_t>(v)];
        if (c == p - 1) row.a[static_cast<std::size_t>(v)] = p - r - 1;
        else if (c >= p) row.a[static_cast<std::size_t>(v)] = p - r;
    }
    row.sense = Sense::le;
    row.b = Rational((p - r) * (t / p));
    return row;
}

/** The clique-family inequality on R keyed by arcs. */
inline LinearInequality clique_family_inequality(const RepGraph& r, const std::vector<VertexSet>& family, int p)
{
    DenseRow row = clique_family_row(r.adjacency, family, p);
    LinearInequality out;
    for (std::size_t i = 0; i < row.a.size(); ++i)
        if (row.a[i] != 0) out.coeffs[r.arcs[i]] = row.a[i];
    out.sense = Sense::le;
    out.rhs = row.b;
    out.family = Family::clique_family;
    out.label = "cf_p" + std::to_string(p) + "_t" + std::to_string(family.size());
    return out;
}

// ---------------------------------------------------------------------------
// validity and separation

/** Every listed point satisfies ineq. */
inline bool check_validity(const LinearInequality& ineq, const std::vector<PointVector>& points)
{
    return std::all_of(points.begin(), points.end(), [&](const PointVector& p) { return evaluate(ineq, p).satisfied; });
}

struct SeparationFamilies
{
    bool model_rows = true;
    bool odd_set = true;
    bool internal = true;
    bool clique_family = true;
};

struct SeparationCaps
{
    int odd_set = 9;
    int internal = 9;
    int clique_family = 6;
};

struct SeparationResult
{
    std::optional<LinearInequality> cut;
    Rational violation = 0;  // lhs - rhs of the returned cut
    bool exhausted = true;   // every enabled family was searched completely
};

namespace detail {

/** Dense point over the arcs of R; validates the index set and [0, 1] bounds. */
inline std::vector<Rational> dense_point(const RepGraph& r, const PointVector& p)
{
    std::vector<Rational> x(static_cast<std::size_t>(r.size()));
    for (std::size_t i = 0; i < r.arcs.size(); ++i) {
        x[i] = p.at(r.arcs[i]);
        if (x[i] < 0 || x[i] > 1) throw InvalidInput("point coordinates must lie in [0, 1]");
    }
    for (const auto& [arc, q] : p.coords)
        if (r.index_of(arc.tail, arc.head) < 0) throw InvalidInput("point has a coordinate on a non-arc");
    return x;
}

template <typename Fn>
void for_each_subset_of_size(int n, int size, Fn&& fn)
{
    if (size > n || size < 0) return;
    std::vector<Vertex> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
        fn(static_cast<const VertexSet&>(pick));
        int i = size - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
        if (i < 0) return;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

class Separator
{
    public:
        Separator(const RepGraph& r, const std::vector<Rational>& x) : r_(r), x_(x) {}

        /** Keeps the most violated candidate (first one on ties). */
        void offer(LinearInequality&& ineq)
        {
            Rational lhs = 0;
            for (const auto& [arc, c] : ineq.coeffs) lhs += c * x_[static_cast<std::size_t>(r_.index_of(arc.tail, arc.head))];
            Rational viol = ineq.sense == Sense::ge ? ineq.rhs - lhs : lhs - ineq.rhs;
            if (viol > 0 && (!best_ || viol > best_violation_)) {
                best_violation_ = viol;
                best_ = std::move(ineq);
            }
        }

        bool found() const { return best_.has_value(); }
        SeparationResult result(bool exhausted) const { return {best_, best_ ? best_violation_ : Rational(0), exhausted}; }

    private:
        const RepGraph& r_;
        const std::vector<Rational>& x_;
        std::optional<LinearInequality> best_;
        Rational best_violation_ = 0;
};

}  // namespace detail

/**
 * Searches for an inequality violated by p in the order: model rows,
 * odd-set rows on complement(G) (sets S with alpha(G[S]) <= 2), internal
 * inequalities, clique-family inequalities over families of maximal cliques
 * of R. Returns the most
 * violated member of the first family that has any violation. Searches cut
 * short by a cap clear `exhausted`.
 */
inline SeparationResult separate_bruteforce(const Graph& g, const VertexOrdering& ord, const PointVector& p,
                                            const SeparationFamilies& families = {}, const SeparationCaps& caps = {})
{
    const RepGraph r = build_rep(g, ord);
    const std::vector<Rational> x = detail::dense_point(r, p);
    const int n = g.order();
    bool exhausted = true;

    if (families.model_rows) {
        detail::Separator sep(r, x);
        for (LinearInequality& row : build_model(g, ord, Variant::compact, ColoringProblem{}).constraints)
            sep.offer(std::move(row));
        if (sep.found()) return sep.result(exhausted);
    }
    if (families.odd_set) {
        detail::Separator sep(r, x);
        Graph co = complement(g);
        for (int size = 3; size <= std::min(caps.odd_set, n); size += 2)
            detail::for_each_subset_of_size(n, size, [&](const VertexSet& s) {
                // only sets with alpha(G[S]) <= 2, where the row is valid
                for (std::size_t i = 0; i < s.size(); ++i)
                    for (std::size_t j = i + 1; j < s.size(); ++j) {
                        if (!co.adjacent(s[i], s[j])) continue;
                        for (std::size_t k = j + 1; k < s.size(); ++k)
                            if (co.adjacent(s[i], s[k]) && co.adjacent(s[j], s[k])) return;
                    }
                LinearInequality row;
                for (std::size_t i = 0; i < s.size(); ++i)
                    for (std::size_t j = i + 1; j < s.size(); ++j)
                        if (co.adjacent(s[i], s[j])) {
                            Vertex a = s[i], b = s[j];
                            row.coeffs[ord.precedes(a, b) ? Arc{a, b} : Arc{b, a}] = 1;
                        }
                if (row.coeffs.empty()) return;
                row.rhs = Rational((size - 1) / 2);
                row.family = Family::odd_set;
                row.label = "odd";
                for (Vertex v : s) row.label += "_" + std::to_string(v + 1);
                sep.offer(std::move(row));
            });
        int largest_odd = n % 2 == 1 ? n : n - 1;
        if (largest_odd >= 3 && caps.odd_set < largest_odd) exhausted = false;
        if (sep.found()) return sep.result(exhausted);
    }
    if (families.internal) {
        detail::Separator sep(r, x);
        for (int size = 2; size <= std::min(caps.internal, n); ++size)
            detail::for_each_subset_of_size(n, size, [&](const VertexSet& s) {
                LinearInequality row = internal_inequality(g, ord, s);
                if (!row.coeffs.empty()) sep.offer(std::move(row));
            });
        if (caps.internal < n) exhausted = false;
        if (sep.found()) return sep.result(exhausted);
    }
    if (families.clique_family) {
        detail::Separator sep(r, x);
        const std::vector<VertexSet> cliques = maximal_cliques(r.adjacency);
        const int k = static_cast<int>(cliques.size());
        for (int t = 1; t <= std::min(caps.clique_family, k); ++t)
            detail::for_each_subset_of_size(k, t, [&](const VertexSet& pick) {
                std::vector<VertexSet> fam;
                for (Vertex i : pick) fam.push_back(cliques[static_cast<std::size_t>(i)]);
                for (int pp = 1; pp <= t; ++pp) {
                    LinearInequality row = clique_family_inequality(r, fam, pp);
                    if (!row.coeffs.empty()) sep.offer(std::move(row));
                }
            });
        if (caps.clique_family < k) exhausted = false;
        if (sep.found()) return sep.result(exhausted);
    }
    return {std::nullopt, 0, exhausted};
}

}  // namespace repcol

#endif  // REPCOL_INEQUALITIES_HPP
