#ifndef REPCOL_CORPUS_HPP
#define REPCOL_CORPUS_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "repcol/graph.hpp"
#include "repcol/structure.hpp"

namespace repcol {

namespace detail {

/** Upper-triangle adjacency bits in row-major pair order (i < j), n <= 11. */
inline std::uint64_t adjacency_code(const Graph& g, const std::vector<Vertex>& perm)
{
    // perm[new] = old
    std::uint64_t code = 0;
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            code <<= 1;
            if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) code |= 1;
        }
    return code;
}

inline Graph graph_from_code(int n, std::uint64_t code)
{
    Graph g(n);
    int bit = n * (n - 1) / 2 - 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, --bit)
            if ((code >> bit) & 1U) g.add_edge(i, j);
    return g;
}

/**
 * Canonical code: maximum adjacency code over the relabelings that list
 * vertices by non-increasing degree (only permutations inside equal-degree
 * cells are tried). Isomorphic graphs get the same code.
 */
inline std::uint64_t canonical_code(const Graph& g)
{
    const int n = g.order();
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<std::pair<int, int>> cells;  // [begin, end)
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && g.degree(order[static_cast<std::size_t>(j)]) == g.degree(order[static_cast<std::size_t>(i)])) ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    std::uint64_t best = 0;
    auto recurse = [&](auto&& self, std::size_t cell) -> void {
        if (cell == cells.size()) {
            best = std::max(best, adjacency_code(g, order));
            return;
        }
        auto b = order.begin() + cells[cell].first, e = order.begin() + cells[cell].second;
        std::sort(b, e);
        do self(self, cell + 1);
        while (std::next_permutation(b, e));
    };
    recurse(recurse, 0);
    return best;
}

}  // namespace detail

/** Every graph on n vertices up to isomorphism, n <= 8, in canonical form and order. */
inline std::vector<Graph> all_graphs(int n)
{
    if (n < 0 || n > 8) throw CapExceeded("graph generation supports 0 <= n <= 8");
    std::vector<Graph> level{Graph(0)};
    for (int k = 1; k <= n; ++k) {
        std::set<std::uint64_t> codes;
        for (const Graph& base : level)
            for (std::uint32_t nb = 0; nb < (1U << (k - 1)); ++nb) {
                Graph g(k);
                for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
                for (int v = 0; v < k - 1; ++v)
                    if ((nb >> v) & 1U) g.add_edge(v, k - 1);
                codes.insert(detail::canonical_code(g));
            }
        level.clear();
        for (std::uint64_t c : codes) level.push_back(detail::graph_from_code(k, c));
    }
    return level;
}

/** Connected graphs on n vertices up to isomorphism. */
inline std::vector<Graph> connected_graphs(int n)
{
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

inline Graph cycle_graph(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph complete_graph(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph path_graph(int n)
{
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph petersen_graph()
{
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

struct NamedGraph
{
    std::string name;
    Graph graph;
};

/** Named instances used by the CLI corpus and the tests. */
inline std::vector<NamedGraph> named_graphs()
{
    std::vector<NamedGraph> out{
        {"c5", cycle_graph(5)},
        {"c7", cycle_graph(7)},
        {"petersen", petersen_graph()},
        {"paw", pattern_graph(Pattern::paw)},
        {"kite", pattern_graph(Pattern::kite)},
        {"claw", pattern_graph(Pattern::claw)},
        {"diamond", pattern_graph(Pattern::diamond)},
        {"stable3", Graph(3)},
    };
    for (const char* base : {"c7", "petersen", "paw", "kite", "claw", "diamond"}) {
        auto it = std::find_if(out.begin(), out.end(), [&](const NamedGraph& x) { return x.name == base; });
        out.push_back({std::string("co-") + base, complement(it->graph)});
    }
    return out;
}

}  // namespace repcol

#endif  // REPCOL_CORPUS_HPP
