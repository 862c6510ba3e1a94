#ifndef REPCOL_GRAPH_HPP
#define REPCOL_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "repcol/errors.hpp"

namespace repcol {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted ascending, no repeats

/** Unordered vertex pair stored canonically (u < v). */
struct Edge
{
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    bool has(Vertex x) const { return u == x || v == x; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Simple undirected graph on vertices 0..n-1. Edges are kept sorted and
 * canonical; loops are rejected and duplicates collapse.
 */
class Graph
{
    public:
        Graph() = default;
        explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0)
        {
            if (n < 0) throw InvalidInput("negative vertex count");
        }
        Graph(int n, std::span<const Edge> edges) : Graph(n)
        {
            for (const Edge& e : edges) add_edge(e.u, e.v);
        }
        Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(n)
        {
            for (auto [a, b] : edges) add_edge(a, b);
        }

        /** Builder step; returns false when the edge was already present. */
        bool add_edge(Vertex a, Vertex b)
        {
            check_vertex(a);
            check_vertex(b);
            if (a == b) throw InvalidInput("self-loop at vertex " + std::to_string(a));
            if (adjacent(a, b)) return false;
            adj_[index(a, b)] = adj_[index(b, a)] = 1;
            Edge e(a, b);
            edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
            return true;
        }

        int order() const noexcept { return n_; }
        std::size_t size() const noexcept { return edges_.size(); }
        const std::vector<Edge>& edges() const noexcept { return edges_; }

        bool adjacent(Vertex a, Vertex b) const
        {
            return a != b && adj_[index(a, b)] != 0;
        }

        bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }

        VertexSet neighbors(Vertex v) const
        {
            check_vertex(v);
            VertexSet out;
            for (Vertex w = 0; w < n_; ++w)
                if (adjacent(v, w)) out.push_back(w);
            return out;
        }

        int degree(Vertex v) const
        {
            check_vertex(v);
            int d = 0;
            for (Vertex w = 0; w < n_; ++w) d += adjacent(v, w) ? 1 : 0;
            return d;
        }

        /** Neighborhood as a bit mask; requires n <= 64. */
        std::uint64_t neighbor_mask(Vertex v) const
        {
            if (n_ > 64) throw CapExceeded("bit-mask neighborhoods need n <= 64");
            std::uint64_t m = 0;
            for (Vertex w = 0; w < n_; ++w)
                if (adjacent(v, w)) m |= std::uint64_t{1} << w;
            return m;
        }

        bool is_stable(std::span<const Vertex> set) const
        {
            for (std::size_t i = 0; i < set.size(); ++i)
                for (std::size_t j = i + 1; j < set.size(); ++j)
                    if (adjacent(set[i], set[j])) return false;
            return true;
        }

        bool is_clique(std::span<const Vertex> set) const
        {
            for (std::size_t i = 0; i < set.size(); ++i)
                for (std::size_t j = i + 1; j < set.size(); ++j)
                    if (set[i] == set[j] || !adjacent(set[i], set[j])) return false;
            return true;
        }

        void check_vertex(Vertex v) const
        {
            if (!has_vertex(v))
                throw InvalidInput("unknown vertex " + std::to_string(v) + " (n = " + std::to_string(n_) + ")");
        }

        friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

    private:
        std::size_t index(Vertex a, Vertex b) const
        {
            return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
        }

        int n_ = 0;
        std::vector<std::uint8_t> adj_;
        std::vector<Edge> edges_;
};

inline VertexSet all_vertices(const Graph& g)
{
    VertexSet v(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

inline Graph complement(const Graph& g)
{
    Graph h(g.order());
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
            if (!g.adjacent(a, b)) h.add_edge(a, b);
    return h;
}

/** G[within], relabelled 0..k-1 in the order of `within`. */
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> within)
{
    Graph h(static_cast<int>(within.size()));
    for (std::size_t i = 0; i < within.size(); ++i)
        for (std::size_t j = i + 1; j < within.size(); ++j)
            if (g.adjacent(within[i], within[j])) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return h;
}

/** Disjoint union; vertices of `b` are shifted by a.order(). */
inline Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph h(a.order() + b.order());
    for (const Edge& e : a.edges()) h.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) h.add_edge(e.u + a.order(), e.v + a.order());
    return h;
}

/** Complete join: disjoint union plus every edge between the two parts. */
inline Graph complete_join(const Graph& a, const Graph& b)
{
    Graph h = disjoint_union(a, b);
    for (Vertex x = 0; x < a.order(); ++x)
        for (Vertex y = 0; y < b.order(); ++y) h.add_edge(x, a.order() + y);
    return h;
}

// ---------------------------------------------------------------------------
// DIMACS .col

/**
 * Reads the DIMACS edge format: `c` comment lines, one `p edge n m` header
 * and `e u v` lines with 1-indexed vertices. Repeated edges collapse.
 */
inline Graph parse_dimacs(std::istream& in)
{
    std::string line;
    int lineno = 0;
    bool have_header = false;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) throw ParseError("duplicate problem line", lineno);
            std::string kind;
            long long n = -1, m = -1;
            if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "edges" && kind != "col") || n < 0 || m < 0)
                throw ParseError("malformed header, expected 'p edge <n> <m>'", lineno);
            std::string extra;
            if (ls >> extra) throw ParseError("malformed header, trailing tokens", lineno);
            g = Graph(static_cast<int>(n));
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw ParseError("edge line before problem line", lineno);
            long long a = 0, b = 0;
            if (!(ls >> a >> b)) throw ParseError("malformed edge line", lineno);
            std::string extra;
            if (ls >> extra) throw ParseError("malformed edge line, trailing tokens", lineno);
            if (a < 1 || b < 1 || a > g.order() || b > g.order())
                throw ParseError("vertex index out of range", lineno);
            if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a), lineno);
            g.add_edge(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
        } else {
            throw ParseError("unknown line type '" + tag + "'", lineno);
        }
    }
    if (!have_header) throw ParseError("missing problem line 'p edge <n> <m>'");
    return g;
}

inline Graph parse_dimacs(const std::string& text)
{
    std::istringstream in(text);
    return parse_dimacs(in);
}

inline void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment = {})
{
    if (!comment.empty()) out << "c " << comment << "\n";
    out << "p edge " << g.order() << " " << g.size() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
}

}  // namespace repcol

#endif  // REPCOL_GRAPH_HPP
