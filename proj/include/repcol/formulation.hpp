#ifndef REPCOL_FORMULATION_HPP
#define REPCOL_FORMULATION_HPP

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "repcol/ordering.hpp"
#include "repcol/rational.hpp"
#include "repcol/rep_graph.hpp"
#include "repcol/structure.hpp"

namespace repcol {

enum class Sense { le, eq, ge };

enum class Family { representation, clique, odd_set, internal, clique_family, fixing, nonneg, custom };

inline std::string_view family_name(Family f)
{
    switch (f) {
        case Family::representation: return "representation";
        case Family::clique: return "clique";
        case Family::odd_set: return "odd-set";
        case Family::internal: return "internal";
        case Family::clique_family: return "clique-family";
        case Family::fixing: return "fixing";
        case Family::nonneg: return "nonneg";
        case Family::custom: return "custom";
    }
    return "custom";
}

inline Family family_from_name(std::string_view s)
{
    for (Family f : {Family::representation, Family::clique, Family::odd_set, Family::internal, Family::clique_family,
                     Family::fixing, Family::nonneg, Family::custom})
        if (family_name(f) == s) return f;
    throw ParseError("unknown inequality family '" + std::string(s) + "'");
}

inline std::string_view sense_symbol(Sense s)
{
    switch (s) {
        case Sense::le: return "<=";
        case Sense::eq: return "=";
        case Sense::ge: return ">=";
    }
    return "<=";
}

inline Sense sense_from_symbol(std::string_view s)
{
    if (s == "<=" || s == "=<") return Sense::le;
    if (s == ">=" || s == "=>") return Sense::ge;
    if (s == "=" || s == "==") return Sense::eq;
    throw ParseError("unknown sense '" + std::string(s) + "'");
}

/**
 * Point in the model space. Coordinates are looked up by arc; an arc key is
 * matched in either orientation since both name the same non-edge.
 */
struct PointVector
{
    std::map<Arc, Rational> coords;

    const Rational* find(const Arc& a) const
    {
        if (auto it = coords.find(a); it != coords.end()) return &it->second;
        if (!a.diagonal())
            if (auto it = coords.find(Arc{a.head, a.tail}); it != coords.end()) return &it->second;
        return nullptr;
    }

    const Rational& at(const Arc& a) const
    {
        if (const Rational* q = find(a)) return *q;
        throw InvalidInput("point has no coordinate for x_" + std::to_string(a.tail + 1) + "_" + std::to_string(a.head + 1));
    }
};

/** sum coeffs * x (sense) rhs */
struct LinearInequality
{
    std::map<Arc, Rational> coeffs;
    Sense sense = Sense::le;
    Rational rhs = 0;
    Family family = Family::custom;
    std::string label;

    bool support_empty() const
    {
        return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second == 0; });
    }
};

struct Evaluation
{
    Rational lhs;
    bool satisfied = false;
};

inline bool compare(const Rational& lhs, Sense sense, const Rational& rhs)
{
    switch (sense) {
        case Sense::le: return lhs <= rhs;
        case Sense::eq: return lhs == rhs;
        case Sense::ge: return lhs >= rhs;
    }
    return false;
}

inline Evaluation evaluate(const LinearInequality& ineq, const PointVector& p)
{
    Evaluation e;
    for (const auto& [arc, c] : ineq.coeffs)
        if (c != 0) e.lhs += c * p.at(arc);
    e.satisfied = compare(e.lhs, ineq.sense, ineq.rhs);
    return e;
}

// ---------------------------------------------------------------------------
// models

enum class Variant { original, compact };

struct ColoringProblem
{
};

struct MaxColoringProblem
{
    WeightFunction weights;
};

struct PrecolorExtProblem
{
    Precoloring precoloring;
};

using Problem = std::variant<ColoringProblem, MaxColoringProblem, PrecolorExtProblem>;

inline std::string_view problem_name(const Problem& p)
{
    if (std::holds_alternative<ColoringProblem>(p)) return "coloring";
    if (std::holds_alternative<MaxColoringProblem>(p)) return "max_coloring";
    return "precolor_ext";
}

struct Objective
{
    bool maximize = true;
    std::map<Arc, Rational> coeffs;
    Rational offset = 0;  // model value + offset is the signed optimum, see build_model
};

/**
 * Binary program over `variables`. Fixings pin variables to 0 or 1; every
 * variable is binary.
 */
struct ModelSpec
{
    Variant variant = Variant::compact;
    std::string problem;
    int n = 0;
    std::vector<Arc> variables;
    Objective objective;
    std::vector<LinearInequality> constraints;
    std::map<Arc, int> fixings;
};

namespace detail {

inline void require_ordering(const Graph& g, const VertexOrdering& ord)
{
    if (ord.size() != g.order()) throw InvalidInput("ordering size does not match the graph");
}

inline std::string vname(Vertex a, Vertex b)
{
    return std::to_string(a + 1) + "_" + std::to_string(b + 1);
}

/**
 * Fixings for precoloring extension in either variable space.
 *   rep(v) != v : x[rep(v), v] = 1 and x[w, v] = 0 for the other w in N-(v)
 *   rep(v) == v : x[w, v] = 0 for every w in N-(v)   (v represents itself)
 * In the original space x[v, v] is fixed as well.
 */
inline std::map<Arc, int> precoloring_fixings(const Graph& g, const VertexOrdering& ord, const Precoloring& rho,
                                              Variant variant)
{
    std::map<Arc, int> fix;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!rho.colored(v)) continue;
        Vertex r = rep_of(v, rho, ord);
        if (r != v && g.adjacent(r, v))
            throw InvalidInput("representative " + std::to_string(r + 1) + " is adjacent to " + std::to_string(v + 1));
        for (Vertex w : lower_nonneighborhood(g, ord, v)) fix[Arc{w, v}] = (w == r) ? 1 : 0;
        if (variant == Variant::original) fix[Arc{v, v}] = (r == v) ? 1 : 0;
    }
    return fix;
}

}  // namespace detail

/**
 * Builds the representatives model of G under `ord`.
 *
 * Compact variant: one variable per arc; for every u and every maximal
 * clique K of G[N+(u)] (K = {} when N+(u) is empty) the row
 *     sum_{w in N-(u)} x[w,u] + sum_{v in K} x[u,v] <= 1.
 * Rows whose support is empty (0 <= 1) are dropped.
 *
 * Original variant: additionally x[u,u]; rows x[u,u] + sum_{N-(u)} x[w,u] = 1
 * and sum_{v in K} x[u,v] <= x[u,u] per maximal clique K, or 0 <= x[u,u]
 * when N+(u) is empty.
 *
 * Objective (compact): maximize the represented total, sum x (coloring,
 * precoloring extension) or sum w(head) x (max-coloring), with offset -n or
 * -sum w. `-(value + offset)` is then the number of colors or the sum of
 * class weights. The original variant minimizes sum x[u,u] (weighted by w(u)
 * for max-coloring) with zero offset.
 *
 * Max-coloring needs an ordering of non-increasing weight so that every
 * class is represented by a heaviest member. Precoloring extension needs an
 * ordering consistent with the precoloring.
 */
inline ModelSpec build_model(const Graph& g, const VertexOrdering& ord, Variant variant, const Problem& problem)
{
    detail::require_ordering(g, ord);
    ModelSpec m;
    m.variant = variant;
    m.problem = std::string(problem_name(problem));
    m.n = g.order();

    const WeightFunction* weights = nullptr;
    if (const auto* mc = std::get_if<MaxColoringProblem>(&problem)) {
        weights = &mc->weights;
        if (weights->size() != g.order()) throw InvalidInput("weight function must cover every vertex");
        for (const Rational& x : weights->w)
            if (x < 0) throw InvalidInput("weights must be nonnegative");
        if (!is_weight_monotone(ord, *weights))
            throw InvalidInput("max-coloring needs an ordering of non-increasing weight");
    }
    if (const auto* pe = std::get_if<PrecolorExtProblem>(&problem)) {
        require_proper(g, pe->precoloring);
        if (auto bad = consistency_violation(ord, pe->precoloring))
            throw InvalidInput("ordering is not consistent with the precoloring: uncolored vertex " +
                               std::to_string(bad->first + 1) + " precedes class leader " +
                               std::to_string(bad->second + 1));
    }

    const std::vector<Arc> arcs = oriented_nonedges(g, ord);
    if (variant == Variant::original)
        for (Vertex u = 0; u < g.order(); ++u) m.variables.push_back(Arc{u, u});
    m.variables.insert(m.variables.end(), arcs.begin(), arcs.end());

    for (Vertex u = 0; u < g.order(); ++u) {
        const VertexSet lower = lower_nonneighborhood(g, ord, u);
        const VertexSet upper = upper_nonneighborhood(g, ord, u);
        std::vector<VertexSet> cliques = maximal_cliques(g, upper);
        if (variant == Variant::original) {
            LinearInequality rep;
            rep.coeffs[Arc{u, u}] = 1;
            for (Vertex w : lower) rep.coeffs[Arc{w, u}] = 1;
            rep.sense = Sense::eq;
            rep.rhs = 1;
            rep.family = Family::representation;
            rep.label = "rep_" + std::to_string(u + 1);
            m.constraints.push_back(std::move(rep));
            if (cliques.empty()) {
                LinearInequality nn;
                nn.coeffs[Arc{u, u}] = -1;
                nn.rhs = 0;
                nn.family = Family::nonneg;
                nn.label = "self_" + std::to_string(u + 1);
                m.constraints.push_back(std::move(nn));
            }
            for (std::size_t k = 0; k < cliques.size(); ++k) {
                LinearInequality row;
                for (Vertex v : cliques[k]) row.coeffs[Arc{u, v}] = 1;
                row.coeffs[Arc{u, u}] = -1;
                row.rhs = 0;
                row.family = Family::clique;
                row.label = "clq_" + std::to_string(u + 1) + "_" + std::to_string(k + 1);
                m.constraints.push_back(std::move(row));
            }
        } else {
            if (cliques.empty()) cliques.emplace_back();
            for (std::size_t k = 0; k < cliques.size(); ++k) {
                LinearInequality row;
                for (Vertex w : lower) row.coeffs[Arc{w, u}] = 1;
                for (Vertex v : cliques[k]) row.coeffs[Arc{u, v}] = 1;
                if (row.coeffs.empty()) continue;
                row.rhs = 1;
                row.family = Family::clique;
                row.label = "rep_" + std::to_string(u + 1) + "_" + std::to_string(k + 1);
                m.constraints.push_back(std::move(row));
            }
        }
    }

    if (variant == Variant::compact) {
        m.objective.maximize = true;
        Rational total = 0;
        for (Vertex u = 0; u < g.order(); ++u) total += weights ? (*weights)(u) : Rational(1);
        for (const Arc& a : arcs) m.objective.coeffs[a] = weights ? (*weights)(a.head) : Rational(1);
        m.objective.offset = -total;
    } else {
        m.objective.maximize = false;
        for (Vertex u = 0; u < g.order(); ++u) m.objective.coeffs[Arc{u, u}] = weights ? (*weights)(u) : Rational(1);
        m.objective.offset = 0;
    }

    if (const auto* pe = std::get_if<PrecolorExtProblem>(&problem))
        m.fixings = detail::precoloring_fixings(g, ord, pe->precoloring, variant);
    return m;
}

/** Every constraint and fixing holds at p (exact). */
inline bool check_point(const ModelSpec& m, const PointVector& p)
{
    for (const Arc& v : m.variables) (void)p.at(v);
    for (const LinearInequality& row : m.constraints)
        if (!evaluate(row, p).satisfied) return false;
    for (const auto& [arc, value] : m.fixings)
        if (p.at(arc) != value) return false;
    return true;
}

// ---------------------------------------------------------------------------
// CPLEX LP export

namespace detail {

struct ScaledRow
{
    std::vector<std::pair<Arc, Rational>> terms;  // sorted by (tail, head)
    Rational rhs;
    Rational scale = 1;
};

/** Integral-or-decimal representation of a row; scales by the lcm of denominators otherwise. */
inline ScaledRow lp_row(const std::map<Arc, Rational>& coeffs, const Rational& rhs)
{
    ScaledRow row;
    for (const auto& [a, c] : coeffs)
        if (c != 0) row.terms.emplace_back(a, c);
    row.rhs = rhs;
    bool decimal = is_finite_decimal(rhs);
    for (const auto& t : row.terms) decimal = decimal && is_finite_decimal(t.second);
    if (!decimal) {
        BigInt l = denominator_of(rhs);
        for (const auto& t : row.terms) l = lcm(l, denominator_of(t.second));
        row.scale = Rational(l);
        for (auto& t : row.terms) t.second *= row.scale;
        row.rhs *= row.scale;
    }
    return row;
}

inline std::string lp_number(const Rational& q)
{
    return is_finite_decimal(q) ? to_decimal_string(q) : to_string(q);
}

inline std::string lp_var(const Arc& a)
{
    return "x_" + vname(a.tail, a.head);
}

inline void lp_terms(std::ostream& out, const std::vector<std::pair<Arc, Rational>>& terms)
{
    bool first = true;
    for (const auto& [a, c] : terms) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            out << (c < 0 ? " - " : " ");
        else
            out << (c < 0 ? " - " : " + ");
        if (mag != 1) out << lp_number(mag) << " ";
        out << lp_var(a);
        first = false;
    }
}

}  // namespace detail

/**
 * CPLEX LP text. The objective offset cannot be expressed in LP format and is
 * reported in a comment; rows with non-decimal rationals are scaled by the
 * lcm of their denominators. Output is deterministic.
 */
inline void export_lp(std::ostream& out, const ModelSpec& m)
{
    out << "\\ representatives model, variant " << (m.variant == Variant::compact ? "compact" : "original")
        << ", problem " << m.problem << "\n";
    out << "\\ objective offset: " << to_string(m.objective.offset) << "\n";
    detail::ScaledRow obj = detail::lp_row(m.objective.coeffs, 0);
    if (obj.scale != 1) out << "\\ objective scaled by " << to_string(obj.scale) << "\n";
    if (m.variant == Variant::compact)
        out << "\\ true optimum = -(objective / scale + offset)\n";
    out << (m.objective.maximize ? "Maximize" : "Minimize") << "\n";
    out << " obj:";
    detail::lp_terms(out, obj.terms);
    out << "\n";

    out << "Subject To\n";
    int unnamed = 0;
    for (const LinearInequality& row : m.constraints) {
        detail::ScaledRow r = detail::lp_row(row.coeffs, row.rhs);
        if (r.terms.empty()) continue;
        out << " " << (row.label.empty() ? "r" + std::to_string(++unnamed) : row.label) << ":";
        detail::lp_terms(out, r.terms);
        out << " " << sense_symbol(row.sense) << " " << detail::lp_number(r.rhs) << "\n";
    }

    out << "Bounds\n";
    for (const auto& [a, value] : m.fixings) out << " " << detail::lp_var(a) << " = " << value << "\n";

    std::vector<Arc> vars = m.variables;
    std::sort(vars.begin(), vars.end());
    out << "Binary\n";
    for (const Arc& a : vars) out << " " << detail::lp_var(a) << "\n";
    out << "End\n";
}

inline std::string export_lp(const ModelSpec& m)
{
    std::ostringstream s;
    export_lp(s, m);
    return s.str();
}

}  // namespace repcol

#endif  // REPCOL_FORMULATION_HPP
