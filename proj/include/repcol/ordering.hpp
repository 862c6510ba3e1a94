#ifndef REPCOL_ORDERING_HPP
#define REPCOL_ORDERING_HPP

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "repcol/graph.hpp"
#include "repcol/rational.hpp"

namespace repcol {

/**
 * Total order on the vertices. `rank(v)` is the position of v; u precedes v
 * iff rank(u) < rank(v).
 */
class VertexOrdering
{
    public:
        VertexOrdering() = default;

        /** From the sequence of vertices listed smallest first. */
        static VertexOrdering from_sequence(std::vector<Vertex> sequence)
        {
            VertexOrdering o;
            o.sequence_ = std::move(sequence);
            o.rank_.assign(o.sequence_.size(), -1);
            for (std::size_t i = 0; i < o.sequence_.size(); ++i) {
                Vertex v = o.sequence_[i];
                if (v < 0 || static_cast<std::size_t>(v) >= o.sequence_.size() || o.rank_[static_cast<std::size_t>(v)] != -1)
                    throw InvalidInput("ordering is not a permutation of 0..n-1");
                o.rank_[static_cast<std::size_t>(v)] = static_cast<int>(i);
            }
            return o;
        }

        static VertexOrdering identity(int n)
        {
            std::vector<Vertex> seq(static_cast<std::size_t>(n));
            std::iota(seq.begin(), seq.end(), 0);
            return from_sequence(std::move(seq));
        }

        int size() const noexcept { return static_cast<int>(sequence_.size()); }
        int rank(Vertex v) const { return rank_.at(static_cast<std::size_t>(v)); }
        Vertex at(int position) const { return sequence_.at(static_cast<std::size_t>(position)); }
        bool precedes(Vertex u, Vertex v) const { return rank(u) < rank(v); }
        const std::vector<Vertex>& sequence() const noexcept { return sequence_; }

        friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) { return a.sequence_ == b.sequence_; }

    private:
        std::vector<Vertex> sequence_;
        std::vector<int> rank_;
};

/** Nonnegative rational weight per vertex. */
struct WeightFunction
{
    std::vector<Rational> w;

    const Rational& operator()(Vertex v) const { return w.at(static_cast<std::size_t>(v)); }
    int size() const noexcept { return static_cast<int>(w.size()); }
};

/**
 * Partial color assignment. `color[v] == 0` means v is not precolored;
 * colors are positive integers.
 */
struct Precoloring
{
    std::vector<int> color;

    Precoloring() = default;
    explicit Precoloring(int n) : color(static_cast<std::size_t>(n), 0) {}
    Precoloring(int n, std::initializer_list<std::pair<Vertex, int>> assignment) : Precoloring(n)
    {
        for (auto [v, c] : assignment) color.at(static_cast<std::size_t>(v)) = c;
    }

    bool colored(Vertex v) const { return color.at(static_cast<std::size_t>(v)) != 0; }
    int operator()(Vertex v) const { return color.at(static_cast<std::size_t>(v)); }
    bool empty() const { return std::all_of(color.begin(), color.end(), [](int c) { return c == 0; }); }

    /** Nonempty classes keyed by color, members ascending by id. */
    std::map<int, VertexSet> classes() const
    {
        std::map<int, VertexSet> out;
        for (std::size_t v = 0; v < color.size(); ++v)
            if (color[v] != 0) out[color[v]].push_back(static_cast<Vertex>(v));
        return out;
    }
};

// ---------------------------------------------------------------------------
// non-neighborhoods

/** Non-neighbors of u that precede u. */
inline VertexSet lower_nonneighborhood(const Graph& g, const VertexOrdering& ord, Vertex u)
{
    g.check_vertex(u);
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (v != u && !g.adjacent(u, v) && ord.precedes(v, u)) out.push_back(v);
    return out;
}

/** Non-neighbors of u that follow u. */
inline VertexSet upper_nonneighborhood(const Graph& g, const VertexOrdering& ord, Vertex u)
{
    g.check_vertex(u);
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (v != u && !g.adjacent(u, v) && ord.precedes(u, v)) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// orderings

inline VertexOrdering ordering_identity(const Graph& g)
{
    return VertexOrdering::identity(g.order());
}

/** Non-increasing weight, ties by ascending id. */
inline VertexOrdering ordering_by_weight(const Graph& g, const WeightFunction& w)
{
    if (w.size() != g.order()) throw InvalidInput("weight function must cover every vertex");
    for (const Rational& x : w.w)
        if (x < 0) throw InvalidInput("weights must be nonnegative");
    std::vector<Vertex> seq = all_vertices(g);
    std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return w(a) > w(b); });
    return VertexOrdering::from_sequence(std::move(seq));
}

/** True iff the ordering lists vertices by non-increasing weight. */
inline bool is_weight_monotone(const VertexOrdering& ord, const WeightFunction& w)
{
    for (int i = 0; i + 1 < ord.size(); ++i)
        if (w(ord.at(i)) < w(ord.at(i + 1))) return false;
    return true;
}

inline bool is_proper(const Graph& g, const Precoloring& rho)
{
    if (static_cast<int>(rho.color.size()) != g.order()) return false;
    for (int c : rho.color)
        if (c < 0) return false;
    for (const Edge& e : g.edges())
        if (rho.colored(e.u) && rho(e.u) == rho(e.v)) return false;
    return true;
}

inline void require_proper(const Graph& g, const Precoloring& rho)
{
    if (static_cast<int>(rho.color.size()) != g.order())
        throw InvalidInput("precoloring size does not match the graph");
    for (int c : rho.color)
        if (c < 0) throw InvalidInput("precoloring colors must be positive");
    for (const Edge& e : g.edges())
        if (rho.colored(e.u) && rho(e.u) == rho(e.v))
            throw InvalidInput("improper precoloring: adjacent vertices " + std::to_string(e.u + 1) + " and " +
                               std::to_string(e.v + 1) + " share color " + std::to_string(rho(e.u)));
}

/**
 * Some member of every nonempty class must precede every uncolored vertex.
 * Equivalently the minimum of each class precedes every uncolored vertex.
 */
inline bool is_consistent(const VertexOrdering& ord, const Precoloring& rho)
{
    for (const auto& [c, members] : rho.classes()) {
        Vertex lead = *std::min_element(members.begin(), members.end(),
                                        [&](Vertex a, Vertex b) { return ord.precedes(a, b); });
        for (Vertex w = 0; w < ord.size(); ++w)
            if (!rho.colored(w) && ord.precedes(w, lead)) return false;
    }
    return true;
}

/** First violating (uncolored vertex, class leader) pair, if any. */
inline std::optional<std::pair<Vertex, Vertex>> consistency_violation(const VertexOrdering& ord, const Precoloring& rho)
{
    for (const auto& [c, members] : rho.classes()) {
        Vertex lead = *std::min_element(members.begin(), members.end(),
                                        [&](Vertex a, Vertex b) { return ord.precedes(a, b); });
        for (Vertex w = 0; w < ord.size(); ++w)
            if (!rho.colored(w) && ord.precedes(w, lead)) return std::pair{w, lead};
    }
    return std::nullopt;
}

/** The earliest member (under ord) of v's color class. */
inline Vertex rep_of(Vertex v, const Precoloring& rho, const VertexOrdering& ord)
{
    if (!rho.colored(v)) throw InvalidInput("rep_of: vertex " + std::to_string(v) + " is not precolored");
    Vertex best = v;
    for (Vertex u = 0; u < static_cast<Vertex>(rho.color.size()); ++u)
        if (rho(u) == rho(v) && ord.precedes(u, best)) best = u;
    return best;
}

/**
 * One leader per color class (ascending id), then the remaining precolored
 * vertices, then the uncolored ones; each block ascending by id.
 */
inline VertexOrdering ordering_consistent(const Graph& g, const Precoloring& rho)
{
    require_proper(g, rho);
    std::vector<Vertex> leaders, followers, rest;
    for (const auto& [c, members] : rho.classes()) {
        leaders.push_back(members.front());
        followers.insert(followers.end(), members.begin() + 1, members.end());
    }
    std::sort(leaders.begin(), leaders.end());
    std::sort(followers.begin(), followers.end());
    for (Vertex v = 0; v < g.order(); ++v)
        if (!rho.colored(v)) rest.push_back(v);
    std::vector<Vertex> seq;
    seq.insert(seq.end(), leaders.begin(), leaders.end());
    seq.insert(seq.end(), followers.begin(), followers.end());
    seq.insert(seq.end(), rest.begin(), rest.end());
    return VertexOrdering::from_sequence(std::move(seq));
}

// ---------------------------------------------------------------------------
// side files (1-indexed vertex ids, '#' comments)

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line, int& lineno)
{
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

}  // namespace detail

/** One line holding a permutation of 1..n, leftmost is the smallest. */
inline VertexOrdering parse_ordering(std::istream& in, int n)
{
    std::string line;
    int lineno = 0;
    std::vector<Vertex> seq;
    while (detail::next_content_line(in, line, lineno)) {
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            long long v = 0;
            try {
                std::size_t used = 0;
                v = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError("ordering entry '" + tok + "' is not an integer", lineno);
            }
            if (v < 1 || v > n) throw ParseError("ordering entry " + tok + " out of range 1.." + std::to_string(n), lineno);
            seq.push_back(static_cast<Vertex>(v - 1));
        }
    }
    if (static_cast<int>(seq.size()) != n)
        throw ParseError("ordering lists " + std::to_string(seq.size()) + " vertices, expected " + std::to_string(n));
    try {
        return VertexOrdering::from_sequence(std::move(seq));
    } catch (const InvalidInput&) {
        throw ParseError("ordering is not a permutation of 1.." + std::to_string(n));
    }
}

/** Lines `v c` with 1-indexed v and positive color c. */
inline Precoloring parse_precoloring(std::istream& in, int n)
{
    Precoloring rho(n);
    std::string line;
    int lineno = 0;
    while (detail::next_content_line(in, line, lineno)) {
        std::istringstream ls(line);
        long long v = 0, c = 0;
        std::string extra;
        if (!(ls >> v >> c) || (ls >> extra)) throw ParseError("expected 'vertex color'", lineno);
        if (v < 1 || v > n) throw ParseError("vertex out of range", lineno);
        if (c < 1) throw ParseError("colors must be positive", lineno);
        if (rho.color[static_cast<std::size_t>(v - 1)] != 0) throw ParseError("vertex precolored twice", lineno);
        rho.color[static_cast<std::size_t>(v - 1)] = static_cast<int>(c);
    }
    return rho;
}

/** Lines `v w`, w decimal or p/q; every vertex must be given. */
inline WeightFunction parse_weights(std::istream& in, int n)
{
    std::vector<std::optional<Rational>> got(static_cast<std::size_t>(n));
    std::string line;
    int lineno = 0;
    while (detail::next_content_line(in, line, lineno)) {
        std::istringstream ls(line);
        long long v = 0;
        std::string w, extra;
        if (!(ls >> v >> w) || (ls >> extra)) throw ParseError("expected 'vertex weight'", lineno);
        if (v < 1 || v > n) throw ParseError("vertex out of range", lineno);
        Rational q;
        try {
            q = parse_rational(w);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
        if (q < 0) throw ParseError("weights must be nonnegative", lineno);
        got[static_cast<std::size_t>(v - 1)] = q;
    }
    WeightFunction wf;
    for (int v = 0; v < n; ++v) {
        if (!got[static_cast<std::size_t>(v)]) throw ParseError("missing weight for vertex " + std::to_string(v + 1));
        wf.w.push_back(*got[static_cast<std::size_t>(v)]);
    }
    return wf;
}

}  // namespace repcol

#endif  // REPCOL_ORDERING_HPP
