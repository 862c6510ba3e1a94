#ifndef REPCOL_SOLVERS_HPP
#define REPCOL_SOLVERS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "repcol/formulation.hpp"
#include "repcol/matching.hpp"
#include "repcol/rep_graph.hpp"
#include "repcol/structure.hpp"

namespace repcol {

/**
 * A partition of V into stable sets. `vector` is the canonical encoding of
 * the partition under `ordering`. `objective` is the number of colors, or
 * the sum of class-maximum weights for max-coloring.
 */
struct ColoringSolution
{
    std::vector<VertexSet> classes;  // each sorted, ordered by smallest member
    int colors_used = 0;
    Rational objective = 0;
    PointVector vector;
    VertexOrdering ordering;
};

/** Canonical vector of a partition: x[u, v] = 1 iff u is the ordering-minimum of v's class. */
inline PointVector encode_partition(const Graph& g, const VertexOrdering& ord, const std::vector<VertexSet>& classes)
{
    PointVector p;
    for (const Arc& a : oriented_nonedges(g, ord)) p.coords[a] = 0;
    for (const VertexSet& cls : classes) {
        if (cls.empty()) continue;
        Vertex leader = *std::min_element(cls.begin(), cls.end(), [&](Vertex a, Vertex b) { return ord.precedes(a, b); });
        for (Vertex v : cls)
            if (v != leader) p.coords.at(Arc{leader, v}) = 1;
    }
    return p;
}

/** Classes from a stable set of R (set arcs), each vertex defaulting to its own class. */
inline std::vector<VertexSet> decode_arcs(int n, const std::vector<Arc>& chosen)
{
    std::vector<Vertex> rep(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) rep[static_cast<std::size_t>(v)] = v;
    for (const Arc& a : chosen) rep[static_cast<std::size_t>(a.head)] = a.tail;
    std::map<Vertex, VertexSet> by_rep;
    for (Vertex v = 0; v < n; ++v) by_rep[rep[static_cast<std::size_t>(v)]].push_back(v);
    std::vector<VertexSet> classes;
    for (auto& [r, members] : by_rep) classes.push_back(std::move(members));
    std::sort(classes.begin(), classes.end());
    return classes;
}

namespace detail {

inline void require_alpha_le_2(const Graph& g)
{
    if (contains_subgraph(complement(g), Pattern::triangle))
        throw InvalidInput("matching method needs stability number at most 2");
}

inline ColoringSolution solution_from_matching(const Graph& g, const VertexOrdering& ord, const Matching& m)
{
    std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
    ColoringSolution s;
    for (const Edge& e : m) {
        s.classes.push_back({e.u, e.v});
        covered[static_cast<std::size_t>(e.u)] = covered[static_cast<std::size_t>(e.v)] = 1;
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (!covered[static_cast<std::size_t>(v)]) s.classes.push_back({v});
    std::sort(s.classes.begin(), s.classes.end());
    s.colors_used = static_cast<int>(s.classes.size());
    s.objective = s.colors_used;
    s.ordering = ord;
    s.vector = encode_partition(g, ord, s.classes);
    return s;
}

}  // namespace detail

/** Optimal coloring when alpha(G) <= 2: classes are a maximum matching of the complement plus singletons. */
inline ColoringSolution solve_coloring_matching(const Graph& g)
{
    detail::require_alpha_le_2(g);
    return detail::solution_from_matching(g, ordering_identity(g), maximum_matching(complement(g)));
}

/**
 * Optimal precoloring extension when alpha(G) <= 2. Complement edges joining
 * distinct precolor classes are deleted, every two-vertex precolor class is
 * a forced matching edge, and a maximum matching of what remains gives the
 * classes. The vector is encoded under ordering_consistent(G, rho).
 */
inline ColoringSolution solve_precolor_ext_matching(const Graph& g, const Precoloring& rho)
{
    detail::require_alpha_le_2(g);
    require_proper(g, rho);
    std::map<int, VertexSet> classes = rho.classes();
    std::vector<Edge> forced;
    for (const auto& [c, members] : classes) {
        if (members.size() >= 3)
            throw Infeasible("precolor class " + std::to_string(c) + " has " + std::to_string(members.size()) +
                             " vertices, more than a stable set can hold when alpha <= 2");
        if (members.size() == 2) forced.emplace_back(members[0], members[1]);
    }
    const Graph co = complement(g);
    Graph h(g.order());
    for (const Edge& e : co.edges())
        if (!(rho.colored(e.u) && rho.colored(e.v) && rho(e.u) != rho(e.v))) h.add_edge(e.u, e.v);
    Matching m = maximum_matching(h, std::nullopt, forced);
    return detail::solution_from_matching(g, ordering_consistent(g, rho), m);
}

/**
 * Exact optimum by branch and bound over the stable sets of R. Arc weights
 * are 1, or w(head) for max-coloring; precoloring fixings are enforced.
 * Among optimal stable sets the lexicographically smallest vector (in arc
 * order) is returned. At most 64 arcs.
 */
inline ColoringSolution solve_exact(const Graph& g, const VertexOrdering& ord, const Problem& problem)
{
    const ModelSpec model = build_model(g, ord, Variant::compact, problem);
    const RepGraph r = build_rep(g, ord);
    const int k = r.size();
    if (k > 64) throw CapExceeded("exact solver: " + std::to_string(k) + " arcs exceed the 64-arc limit");
    using Mask = std::uint64_t;
    std::vector<Mask> nbr(static_cast<std::size_t>(k), 0);
    for (const Edge& e : r.adjacency.edges()) {
        nbr[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
        nbr[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
    }
    std::vector<Rational> weight(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) weight[static_cast<std::size_t>(i)] = model.objective.coeffs.at(r.arcs[static_cast<std::size_t>(i)]);

    Mask forced = 0, banned = 0;
    for (const auto& [arc, value] : model.fixings) {
        int idx = r.index_of(arc.tail, arc.head);
        if (value == 1)
            forced |= Mask{1} << idx;
        else
            banned |= Mask{1} << idx;
    }
    for (int i = 0; i < k; ++i)
        if ((forced >> i) & 1U) {
            if (nbr[static_cast<std::size_t>(i)] & forced) throw Infeasible("precoloring fixings force adjacent arcs of R");
            banned |= nbr[static_cast<std::size_t>(i)];
        }
    if (forced & banned) throw Infeasible("precoloring fixings contradict each other");

    Rational forced_value = 0;
    for (int i = 0; i < k; ++i)
        if ((forced >> i) & 1U) forced_value += weight[static_cast<std::size_t>(i)];

    Mask best_set = 0;
    Rational best = -1;
    auto bound_of = [&](int from, Mask blocked) {
        Rational b = 0;
        for (int i = from; i < k; ++i)
            if (!((blocked >> i) & 1U) && weight[static_cast<std::size_t>(i)] > 0) b += weight[static_cast<std::size_t>(i)];
        return b;
    };
    auto search = [&](auto&& self, int i, Mask chosen, Mask blocked, const Rational& value) -> void {
        if (value + bound_of(i, blocked) <= best) return;
        if (i == k) {
            best = value;
            best_set = chosen;
            return;
        }
        const Mask bit = Mask{1} << i;
        if (chosen & bit) {
            self(self, i + 1, chosen, blocked, value);
            return;
        }
        self(self, i + 1, chosen, blocked | bit, value);
        if (!(blocked & bit)) self(self, i + 1, chosen | bit, blocked | nbr[static_cast<std::size_t>(i)], value + weight[static_cast<std::size_t>(i)]);
    };
    // forced arcs are already chosen and count toward the value; banned arcs are blocked
    search(search, 0, forced, banned | forced, forced_value);

    std::vector<Arc> chosen_arcs;
    for (int i = 0; i < k; ++i)
        if ((best_set >> i) & 1U) chosen_arcs.push_back(r.arcs[static_cast<std::size_t>(i)]);
    ColoringSolution s;
    s.classes = decode_arcs(g.order(), chosen_arcs);
    s.colors_used = static_cast<int>(s.classes.size());
    s.objective = -(best + model.objective.offset);
    s.ordering = ord;
    s.vector = encode_partition(g, ord, s.classes);
    return s;
}

}  // namespace repcol

#endif  // REPCOL_SOLVERS_HPP
