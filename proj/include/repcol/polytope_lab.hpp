#ifndef REPCOL_POLYTOPE_LAB_HPP
#define REPCOL_POLYTOPE_LAB_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "repcol/double_description.hpp"
#include "repcol/formulation.hpp"
#include "repcol/inequalities.hpp"
#include "repcol/lp.hpp"
#include "repcol/rep_graph.hpp"

namespace repcol {

/** 0/1 point over the arcs of R as a bitmask on arc indices. */
using ArcMask = std::uint64_t;

enum class PointSource { colorings, stable_sets, system_integral_points };

/** Distinct 0/1 points over `arcs`, sorted by mask value. */
struct VertexSetEnumeration
{
    std::vector<Arc> arcs;
    std::vector<ArcMask> points;
    PointSource source = PointSource::colorings;

    std::size_t size() const noexcept { return points.size(); }

    PointVector point(ArcMask m) const
    {
        PointVector p;
        for (std::size_t i = 0; i < arcs.size(); ++i) p.coords[arcs[i]] = (m >> i) & 1U ? 1 : 0;
        return p;
    }

    std::vector<Rational> dense(ArcMask m) const
    {
        std::vector<Rational> x(arcs.size());
        for (std::size_t i = 0; i < arcs.size(); ++i) x[i] = (m >> i) & 1U ? 1 : 0;
        return x;
    }

    bool contains(ArcMask m) const { return std::binary_search(points.begin(), points.end(), m); }
};

/** Enumeration is allowed when arcs <= max_arcs or n <= max_n; never above 64 arcs. */
struct EnumerationCaps
{
    int max_arcs = 20;
    int max_n = 8;
    std::size_t max_points = 2'000'000;
};

/** Passing verdict plus a human-readable witness when it fails. */
struct Verdict
{
    bool pass = true;
    std::string witness;
    bool exhausted = true;

    operator bool() const noexcept { return pass; }
};

namespace detail {

inline std::string mask_string(const std::vector<Arc>& arcs, ArcMask m)
{
    std::string s = "{";
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if ((m >> i) & 1U) {
            if (s.size() > 1) s += ",";
            s += "(" + std::to_string(arcs[i].tail + 1) + "," + std::to_string(arcs[i].head + 1) + ")";
        }
    return s + "}";
}

inline void check_enumeration_caps(int n, std::size_t arcs, const EnumerationCaps& caps)
{
    if (arcs > 64) throw CapExceeded("enumeration: " + std::to_string(arcs) + " arcs exceed the 64-arc limit");
    if (static_cast<int>(arcs) > caps.max_arcs && n > caps.max_n)
        throw CapExceeded("enumeration: " + std::to_string(arcs) + " arcs and n = " + std::to_string(n) +
                          " exceed the caps");
}

/** Rows of `system` as dense rows over the arcs of r (keys matched in either orientation). */
inline std::vector<DenseRow> dense_system(const RepGraph& r, const std::vector<LinearInequality>& system)
{
    std::vector<DenseRow> rows;
    rows.reserve(system.size());
    for (const LinearInequality& ineq : system) {
        DenseRow row;
        row.a.assign(static_cast<std::size_t>(r.size()), 0);
        for (const auto& [arc, c] : ineq.coeffs) {
            int idx = arc.diagonal() ? -1 : r.index_of(arc.tail, arc.head);
            if (idx < 0)
                throw InvalidInput("inequality '" + ineq.label + "' uses x_" + std::to_string(arc.tail + 1) + "_" +
                                   std::to_string(arc.head + 1) + ", which is not an arc");
            row.a[static_cast<std::size_t>(idx)] += c;
        }
        row.sense = ineq.sense;
        row.b = ineq.rhs;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// enumeration

/**
 * One point per partition of V into stable sets, under the canonical
 * encoding: x[u, v] = 1 iff u is the ordering-minimum of v's class, u != v.
 * With a precoloring, only partitions that keep each precolor class inside
 * one part and distinct classes in distinct parts.
 */
inline VertexSetEnumeration enumerate_colorings(const Graph& g, const VertexOrdering& ord,
                                                const std::optional<Precoloring>& rho = std::nullopt,
                                                const EnumerationCaps& caps = {})
{
    if (ord.size() != g.order()) throw InvalidInput("ordering size does not match the graph");
    if (rho) require_proper(g, *rho);
    const RepGraph r = build_rep(g, ord);
    detail::check_enumeration_caps(g.order(), r.arcs.size(), caps);

    VertexSetEnumeration out;
    out.arcs = r.arcs;
    out.source = PointSource::colorings;

    struct Part
    {
        Vertex leader;
        int color;
        std::vector<Vertex> members;
    };
    std::vector<Part> parts;
    const int n = g.order();

    auto recurse = [&](auto&& self, int pos, ArcMask mask) -> void {
        if (pos == n) {
            out.points.push_back(mask);
            if (out.points.size() > caps.max_points) throw CapExceeded("enumeration: point budget exceeded");
            return;
        }
        const Vertex v = ord.at(pos);
        const int c = rho ? (*rho)(v) : 0;
        bool color_open = true;  // no existing part carries color c
        for (std::size_t i = 0; i < parts.size(); ++i) {
            Part& part = parts[i];
            if (c != 0 && part.color == c) color_open = false;
            if (c != 0 && part.color != 0 && part.color != c) continue;
            bool ok = true;
            for (Vertex m : part.members)
                if (g.adjacent(m, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (c != 0 && part.color == 0) {
                // joining an uncolored part is allowed only if no other part holds c
                bool taken = std::any_of(parts.begin(), parts.end(), [&](const Part& q) { return q.color == c; });
                if (taken) continue;
            }
            const int saved = part.color;
            if (c != 0) part.color = c;
            part.members.push_back(v);
            const int idx = r.index_of(part.leader, v);
            self(self, pos + 1, mask | (ArcMask{1} << idx));
            parts[i].members.pop_back();
            parts[i].color = saved;
        }
        if (c == 0 || color_open) {
            parts.push_back(Part{v, c, {v}});
            self(self, pos + 1, mask);
            parts.pop_back();
        }
    };
    recurse(recurse, 0, 0);
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

/** All stable sets of R as arc masks. */
inline VertexSetEnumeration enumerate_stable_sets(const RepGraph& r, const EnumerationCaps& caps = {})
{
    detail::check_enumeration_caps(r.n, r.arcs.size(), caps);
    const int k = r.size();
    std::vector<ArcMask> nbr(static_cast<std::size_t>(k), 0);
    for (const Edge& e : r.adjacency.edges()) {
        nbr[static_cast<std::size_t>(e.u)] |= ArcMask{1} << e.v;
        nbr[static_cast<std::size_t>(e.v)] |= ArcMask{1} << e.u;
    }
    VertexSetEnumeration out;
    out.arcs = r.arcs;
    out.source = PointSource::stable_sets;
    auto recurse = [&](auto&& self, int i, ArcMask chosen, ArcMask blocked) -> void {
        if (i == k) {
            out.points.push_back(chosen);
            if (out.points.size() > caps.max_points) throw CapExceeded("enumeration: point budget exceeded");
            return;
        }
        self(self, i + 1, chosen, blocked);
        if (!((blocked >> i) & 1U)) self(self, i + 1, chosen | (ArcMask{1} << i), blocked | nbr[static_cast<std::size_t>(i)]);
    };
    recurse(recurse, 0, 0, 0);
    std::sort(out.points.begin(), out.points.end());
    return out;
}

/** 0/1 points over the arcs of R that satisfy every row of `system` (at most 24 arcs). */
inline VertexSetEnumeration enumerate_integral_points(const RepGraph& r, const std::vector<LinearInequality>& system)
{
    if (r.size() > 24) throw CapExceeded("integral point enumeration is limited to 24 arcs");
    const std::vector<DenseRow> rows = detail::dense_system(r, system);
    VertexSetEnumeration out;
    out.arcs = r.arcs;
    out.source = PointSource::system_integral_points;
    const ArcMask end = ArcMask{1} << r.size();
    for (ArcMask m = 0; m < end; ++m) {
        std::vector<Rational> x = out.dense(m);
        if (std::all_of(rows.begin(), rows.end(), [&](const DenseRow& row) { return row.holds(x); }))
            out.points.push_back(m);
    }
    return out;
}

/** Every matching of complement(G) as an arc mask (arc i is complement edge i). */
inline VertexSetEnumeration enumerate_matchings(const Graph& g, const VertexOrdering& ord, const EnumerationCaps& caps = {})
{
    const RepGraph r = build_rep(g, ord);
    detail::check_enumeration_caps(g.order(), r.arcs.size(), caps);
    VertexSetEnumeration out;
    out.arcs = r.arcs;
    out.source = PointSource::system_integral_points;
    const int k = r.size();
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    auto recurse = [&](auto&& self, int i, ArcMask chosen) -> void {
        if (i == k) {
            out.points.push_back(chosen);
            return;
        }
        self(self, i + 1, chosen);
        const Arc& a = r.arcs[static_cast<std::size_t>(i)];
        if (used[static_cast<std::size_t>(a.tail)] || used[static_cast<std::size_t>(a.head)]) return;
        used[static_cast<std::size_t>(a.tail)] = used[static_cast<std::size_t>(a.head)] = 1;
        self(self, i + 1, chosen | (ArcMask{1} << i));
        used[static_cast<std::size_t>(a.tail)] = used[static_cast<std::size_t>(a.head)] = 0;
    };
    recurse(recurse, 0, 0);
    std::sort(out.points.begin(), out.points.end());
    return out;
}

// ---------------------------------------------------------------------------
// identities

/** Coloring vectors and stable-set vectors of R coincide. */
inline Verdict verify_coltostab(const Graph& g, const VertexOrdering& ord, const EnumerationCaps& caps = {})
{
    VertexSetEnumeration col = enumerate_colorings(g, ord, std::nullopt, caps);
    VertexSetEnumeration stab = enumerate_stable_sets(build_rep(g, ord), caps);
    if (col.points == stab.points) return {};
    std::vector<ArcMask> diff;
    std::set_symmetric_difference(col.points.begin(), col.points.end(), stab.points.begin(), stab.points.end(),
                                  std::back_inserter(diff));
    return {false, "vectors on one side only: " + detail::mask_string(col.arcs, diff.front())};
}

/** Colorings extending rho equal the colorings satisfying the precoloring fixings. */
inline Verdict verify_preext_identity(const Graph& g, const Precoloring& rho, const VertexOrdering& ord,
                                      const EnumerationCaps& caps = {})
{
    const ModelSpec m = build_model(g, ord, Variant::compact, PrecolorExtProblem{rho});
    VertexSetEnumeration ext = enumerate_colorings(g, ord, rho, caps);
    VertexSetEnumeration all = enumerate_colorings(g, ord, std::nullopt, caps);
    const RepGraph r = build_rep(g, ord);
    std::vector<ArcMask> fixed;
    for (ArcMask p : all.points) {
        bool ok = true;
        for (const auto& [arc, value] : m.fixings) {
            int idx = r.index_of(arc.tail, arc.head);
            if (static_cast<int>((p >> idx) & 1U) != value) {
                ok = false;
                break;
            }
        }
        if (ok) fixed.push_back(p);
    }
    if (ext.points == fixed) return {};
    std::vector<ArcMask> diff;
    std::set_symmetric_difference(ext.points.begin(), ext.points.end(), fixed.begin(), fixed.end(),
                                  std::back_inserter(diff));
    return {false, "vectors on one side only: " + detail::mask_string(all.arcs, diff.front())};
}

// ---------------------------------------------------------------------------
// dimension and facets

/** Dimension of the affine hull, by exact elimination on difference vectors. */
inline int affine_dimension(const std::vector<std::vector<Rational>>& points)
{
    if (points.empty()) throw InvalidInput("affine_dimension needs at least one point");
    const std::size_t d = points.front().size();
    std::vector<std::vector<Rational>> basis;  // echelon rows
    std::vector<std::size_t> pivots;
    for (std::size_t k = 1; k < points.size() && basis.size() < d; ++k) {
        std::vector<Rational> v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = points[k][i] - points[0][i];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Rational& f = v[pivots[b]];
            if (f == 0) continue;
            Rational factor = f;
            for (std::size_t i = 0; i < d; ++i)
                if (basis[b][i] != 0) v[i] -= factor * basis[b][i];
        }
        auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
        if (it == v.end()) continue;
        std::size_t p = static_cast<std::size_t>(it - v.begin());
        Rational lead = v[p];
        for (Rational& q : v) q /= lead;
        for (std::size_t b = 0; b < basis.size(); ++b) {  // keep rows reduced at the new pivot
            Rational f = basis[b][p];
            if (f == 0) continue;
            for (std::size_t i = 0; i < d; ++i)
                if (v[i] != 0) basis[b][i] -= f * v[i];
        }
        basis.push_back(std::move(v));
        pivots.push_back(p);
    }
    return static_cast<int>(basis.size());
}

inline int affine_dimension(const std::vector<PointVector>& points)
{
    if (points.empty()) throw InvalidInput("affine_dimension needs at least one point");
    std::vector<Arc> keys;
    for (const auto& [a, q] : points.front().coords) keys.push_back(a);
    std::vector<std::vector<Rational>> dense;
    for (const PointVector& p : points) {
        std::vector<Rational> x;
        for (const Arc& a : keys) x.push_back(p.at(a));
        dense.push_back(std::move(x));
    }
    return affine_dimension(dense);
}

inline int affine_dimension(const VertexSetEnumeration& e)
{
    std::vector<std::vector<Rational>> dense;
    for (ArcMask m : e.points) dense.push_back(e.dense(m));
    return affine_dimension(dense);
}

/** Valid on all coloring vectors, and the tight ones span a face of one dimension less. */
inline bool is_facet(const LinearInequality& ineq, const Graph& g, const VertexOrdering& ord,
                     const EnumerationCaps& caps = {})
{
    VertexSetEnumeration col = enumerate_colorings(g, ord, std::nullopt, caps);
    const RepGraph r = build_rep(g, ord);
    const DenseRow row = detail::dense_system(r, {ineq}).front();
    std::vector<std::vector<Rational>> all, tight;
    for (ArcMask m : col.points) {
        std::vector<Rational> x = col.dense(m);
        Rational lhs = row.dot(x);
        if (!compare(lhs, row.sense, row.b)) return false;
        if (lhs == row.b) tight.push_back(x);
        all.push_back(std::move(x));
    }
    if (tight.empty()) return false;
    return affine_dimension(tight) == affine_dimension(all) - 1;
}

/** Every matching of complement(G) is a coloring vector and satisfies the compact model. */
inline Verdict verify_match_subset(const Graph& g, const VertexOrdering& ord, const EnumerationCaps& caps = {})
{
    VertexSetEnumeration col = enumerate_colorings(g, ord, std::nullopt, caps);
    VertexSetEnumeration match = enumerate_matchings(g, ord, caps);
    const ModelSpec m = build_model(g, ord, Variant::compact, ColoringProblem{});
    for (ArcMask p : match.points) {
        if (!col.contains(p)) return {false, "matching is not a coloring vector: " + detail::mask_string(col.arcs, p)};
        if (!check_point(m, match.point(p)))
            return {false, "matching violates the compact model: " + detail::mask_string(col.arcs, p)};
    }
    return {};
}

// ---------------------------------------------------------------------------
// complete characterizations

struct LpObjectiveProbe
{
    int k = 200;
    std::uint64_t seed = 1;
};

struct HullCompare
{
    int max_arcs = 12;
};

/** Deterministic rational objective: numerators in [-10, 10], denominators in [1, 5]. */
inline std::vector<Rational> probe_objective(std::mt19937_64& rng, std::size_t d)
{
    std::vector<Rational> c(d);
    for (Rational& q : c) {
        auto num = static_cast<long>(rng() % 21) - 10;
        auto den = static_cast<long>(rng() % 5) + 1;
        q = Rational(num, den);
    }
    return c;
}

/**
 * The system (with 0 <= x <= 1) describes the convex hull of the coloring
 * vectors. Both modes first require every coloring vector to satisfy the
 * system. The probe then compares LP and enumeration optima on k seeded
 * objectives; hull comparison computes every vertex of the system polytope.
 */
inline Verdict verify_characterization(const Graph& g, const VertexOrdering& ord,
                                       const std::vector<LinearInequality>& system,
                                       const std::variant<LpObjectiveProbe, HullCompare>& mode,
                                       const EnumerationCaps& caps = {})
{
    const RepGraph r = build_rep(g, ord);
    if (const auto* hc = std::get_if<HullCompare>(&mode); hc && r.size() > hc->max_arcs)
        throw CapExceeded("hull comparison: " + std::to_string(r.size()) + " arcs exceed cap " +
                          std::to_string(hc->max_arcs));
    VertexSetEnumeration col = enumerate_colorings(g, ord, std::nullopt, caps);
    const std::vector<DenseRow> rows = detail::dense_system(r, system);
    for (ArcMask m : col.points) {
        std::vector<Rational> x = col.dense(m);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!rows[i].holds(x))
                return {false, "coloring vector " + detail::mask_string(col.arcs, m) + " violates '" + system[i].label + "'"};
    }

    if (const auto* probe = std::get_if<LpObjectiveProbe>(&mode)) {
        std::mt19937_64 rng(probe->seed);
        LinearProgram lp;
        lp.num_vars = r.size();
        lp.rows = rows;
        for (int t = 0; t < probe->k; ++t) {
            lp.objective = probe_objective(rng, static_cast<std::size_t>(r.size()));
            LpResult res = solve_lp_lazy(lp);
            if (res.status != LpStatus::optimal)
                throw std::logic_error("characterization probe: LP over a box must be feasible and bounded");
            std::optional<Rational> best;
            for (ArcMask m : col.points) {
                Rational v = 0;
                for (int i = 0; i < r.size(); ++i)
                    if ((m >> i) & 1U) v += lp.objective[static_cast<std::size_t>(i)];
                if (!best || v > *best) best = v;
            }
            if (res.value != *best)
                return {false, "objective " + std::to_string(t + 1) + ": LP optimum " + to_string(res.value) +
                                   " exceeds the best coloring vector " + to_string(*best)};
        }
        return {};
    }

    std::vector<std::vector<Rational>> hull = enumerate_vertices(r.size(), rows);
    std::vector<std::vector<Rational>> expected;
    for (ArcMask m : col.points) expected.push_back(col.dense(m));
    std::sort(expected.begin(), expected.end());
    if (hull == expected) return {};
    for (const auto& v : hull)
        if (!std::binary_search(expected.begin(), expected.end(), v)) {
            std::string s = "fractional or extra vertex (";
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
            return {false, s + ")"};
        }
    return {false, "some coloring vector is not a vertex of the system polytope"};
}

/**
 * Nonnegativity, the compact model rows and the clique-family inequalities
 * over families of at most `family_cap` maximal cliques of R, deduplicated.
 * `exhausted` is false when the cap cut the family search short.
 */
struct CliqueFamilySystem
{
    std::vector<LinearInequality> rows;
    bool exhausted = true;
};

inline CliqueFamilySystem clique_family_system(const Graph& g, const VertexOrdering& ord, int family_cap)
{
    const RepGraph r = build_rep(g, ord);
    CliqueFamilySystem out;
    for (const Arc& a : r.arcs) {
        LinearInequality nn;
        nn.coeffs[a] = -1;
        nn.family = Family::nonneg;
        nn.label = "nn_" + std::to_string(a.tail + 1) + "_" + std::to_string(a.head + 1);
        out.rows.push_back(std::move(nn));
    }
    for (LinearInequality& row : build_model(g, ord, Variant::compact, ColoringProblem{}).constraints)
        out.rows.push_back(std::move(row));
    const std::vector<VertexSet> cliques = maximal_cliques(r.adjacency);
    const int k = static_cast<int>(cliques.size());
    if (family_cap < k) out.exhausted = false;
    std::set<std::pair<std::map<Arc, Rational>, Rational>> seen;
    for (int t = 1; t <= std::min(family_cap, k); ++t)
        detail::for_each_subset_of_size(k, t, [&](const VertexSet& pick) {
            std::vector<VertexSet> fam;
            for (Vertex i : pick) fam.push_back(cliques[static_cast<std::size_t>(i)]);
            for (int p = 1; p <= t; ++p) {
                LinearInequality row = clique_family_inequality(r, fam, p);
                if (row.coeffs.empty()) continue;
                if (!seen.emplace(row.coeffs, row.rhs).second) continue;
                out.rows.push_back(std::move(row));
            }
        });
    return out;
}

}  // namespace repcol

#endif  // REPCOL_POLYTOPE_LAB_HPP
