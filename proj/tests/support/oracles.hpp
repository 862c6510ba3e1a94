// Brute-force reference computations for the unit and acceptance tests.
// Everything here works from definitions and shares no algorithm with the
// library beyond the Graph container.

#ifndef REPCOL_TESTS_ORACLES_HPP
#define REPCOL_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "repcol/graph.hpp"
#include "repcol/rational.hpp"

namespace oracle {

using repcol::Graph;
using repcol::Rational;
using repcol::Vertex;

/** Non-edge {a, b} as an ordered pair (smaller first). */
using Pair = std::pair<int, int>;

inline bool is_stable(const Graph& g, const std::vector<int>& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

inline bool is_clique(const Graph& g, const std::vector<int>& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

inline std::vector<int> members(std::uint32_t mask)
{
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1U) out.push_back(i);
    return out;
}

inline int alpha(const Graph& g)
{
    int best = 0;
    for (std::uint32_t m = 0; m < (1U << g.order()); ++m)
        if (is_stable(g, members(m))) best = std::max(best, static_cast<int>(members(m).size()));
    return best;
}

/** Smallest k with a proper k-coloring, by trying every assignment. */
inline int chi(const Graph& g)
{
    const int n = g.order();
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        for (;;) {
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                for (int b = a + 1; b < n && ok; ++b)
                    if (g.adjacent(a, b) && c[static_cast<std::size_t>(a)] == c[static_cast<std::size_t>(b)]) ok = false;
            if (ok) return k;
            int i = 0;
            while (i < n && ++c[static_cast<std::size_t>(i)] == k) c[static_cast<std::size_t>(i++)] = 0;
            if (i == n) break;
        }
    }
    return n;
}

/** All maximal cliques of g[within] by subset enumeration. */
inline std::set<std::vector<int>> maximal_cliques(const Graph& g, const std::vector<int>& within)
{
    std::set<std::vector<int>> out;
    const int k = static_cast<int>(within.size());
    for (std::uint32_t m = 1; m < (1U << k); ++m) {
        std::vector<int> s;
        for (int i : members(m)) s.push_back(within[static_cast<std::size_t>(i)]);
        if (!is_clique(g, s)) continue;
        bool maximal = true;
        for (int i = 0; i < k && maximal; ++i) {
            if ((m >> i) & 1U) continue;
            std::vector<int> t = s;
            t.push_back(within[static_cast<std::size_t>(i)]);
            if (is_clique(g, t)) maximal = false;
        }
        if (maximal) {
            std::sort(s.begin(), s.end());
            out.insert(s);
        }
    }
    return out;
}

/** Every matching of g as a list of edges, by recursion over the edge list. */
inline std::vector<std::vector<repcol::Edge>> all_matchings(const Graph& g)
{
    std::vector<std::vector<repcol::Edge>> out;
    const auto& edges = g.edges();
    std::vector<repcol::Edge> cur;
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == edges.size()) {
            out.push_back(cur);
            return;
        }
        self(self, i + 1);
        const repcol::Edge& e = edges[i];
        if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) return;
        used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
        cur.push_back(e);
        self(self, i + 1);
        cur.pop_back();
        used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 0;
    };
    rec(rec, 0);
    return out;
}

inline int matching_number(const Graph& g)
{
    std::size_t best = 0;
    for (const auto& m : all_matchings(g)) best = std::max(best, m.size());
    return static_cast<int>(best);
}

/** Does `host` contain `pat` as a subgraph? Tries every injective vertex map. */
inline bool contains(const Graph& host, const Graph& pat)
{
    const int n = host.order(), k = pat.order();
    if (k > n) return false;
    std::vector<int> img(static_cast<std::size_t>(k));
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) {
            for (const repcol::Edge& e : pat.edges())
                if (!host.adjacent(img[static_cast<std::size_t>(e.u)], img[static_cast<std::size_t>(e.v)])) return false;
            return true;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            img[static_cast<std::size_t>(i)] = v;
            bool ok = self(self, i + 1);
            used[static_cast<std::size_t>(v)] = 0;
            if (ok) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

/**
 * Every partition of V into stable sets, as restricted growth strings:
 * block[v] is the part index of v, parts numbered by first occurrence in
 * vertex id order.
 */
inline std::vector<std::vector<int>> stable_partitions(const Graph& g)
{
    const int n = g.order();
    std::vector<std::vector<int>> out;
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int v, int parts) -> void {
        if (v == n) {
            out.push_back(block);
            return;
        }
        for (int b = 0; b <= parts; ++b) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (block[static_cast<std::size_t>(u)] == b && g.adjacent(u, v)) ok = false;
            if (!ok) continue;
            block[static_cast<std::size_t>(v)] = b;
            self(self, v + 1, std::max(parts, b + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline int num_parts(const std::vector<int>& block)
{
    return block.empty() ? 0 : *std::max_element(block.begin(), block.end()) + 1;
}

/** Set pairs (leader, v) of a partition, leader = earliest in `seq` (seq lists vertices smallest first). */
inline std::set<Pair> encode(const std::vector<int>& block, const std::vector<int>& seq)
{
    std::vector<int> rank(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) rank[static_cast<std::size_t>(seq[i])] = static_cast<int>(i);
    std::map<int, int> leader;
    for (int v : seq) leader.emplace(block[static_cast<std::size_t>(v)], v);
    std::set<Pair> out;
    for (std::size_t v = 0; v < block.size(); ++v) {
        int l = leader.at(block[v]);
        if (l != static_cast<int>(v)) out.insert({l, static_cast<int>(v)});
    }
    return out;
}

/** Partition respects a precoloring (0 = free): each color in one part, distinct colors in distinct parts. */
inline bool respects(const std::vector<int>& block, const std::vector<int>& color)
{
    std::map<int, int> part_of_color, color_of_part;
    for (std::size_t v = 0; v < block.size(); ++v) {
        int c = color[v];
        if (c == 0) continue;
        auto [it, fresh] = part_of_color.emplace(c, block[v]);
        if (!fresh && it->second != block[v]) return false;
        auto [jt, fresh2] = color_of_part.emplace(block[v], c);
        if (!fresh2 && jt->second != c) return false;
    }
    return true;
}

/** Minimum number of colors over extensions of `color`, or nullopt. */
inline std::optional<int> min_extension(const Graph& g, const std::vector<int>& color)
{
    std::optional<int> best;
    for (const auto& b : stable_partitions(g))
        if (respects(b, color)) best = best ? std::min(*best, num_parts(b)) : num_parts(b);
    return best;
}

/** Minimum over partitions of the sum of class-maximum weights. */
inline Rational min_max_coloring(const Graph& g, const std::vector<Rational>& w)
{
    std::optional<Rational> best;
    for (const auto& b : stable_partitions(g)) {
        std::map<int, Rational> mx;
        for (std::size_t v = 0; v < b.size(); ++v) {
            auto [it, fresh] = mx.emplace(b[v], w[v]);
            if (!fresh && w[v] > it->second) it->second = w[v];
        }
        Rational total = 0;
        for (const auto& [k, x] : mx) total += x;
        if (!best || total < *best) best = total;
    }
    return *best;
}

/**
 * Adjacency of R taken literally from the model: two arcs are adjacent iff
 * some row of the compact model, over any clique K of N+(u) (not only
 * maximal ones), contains both. Arcs given as (tail, head) pairs.
 */
inline std::set<std::pair<Pair, Pair>> cooccurrence_edges(const Graph& g, const std::vector<int>& seq)
{
    const int n = g.order();
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])] = i;
    std::set<std::pair<Pair, Pair>> out;
    for (int u = 0; u < n; ++u) {
        std::vector<Pair> lower;
        std::vector<int> upper;
        for (int v = 0; v < n; ++v) {
            if (v == u || g.adjacent(u, v)) continue;
            if (rank[static_cast<std::size_t>(v)] < rank[static_cast<std::size_t>(u)])
                lower.push_back({v, u});
            else
                upper.push_back(v);
        }
        for (std::uint32_t m = 0; m < (1U << upper.size()); ++m) {
            std::vector<int> k;
            for (int i : members(m)) k.push_back(upper[static_cast<std::size_t>(i)]);
            if (!is_clique(g, k)) continue;
            std::vector<Pair> support = lower;
            for (int v : k) support.push_back({u, v});
            for (std::size_t i = 0; i < support.size(); ++i)
                for (std::size_t j = i + 1; j < support.size(); ++j)
                    out.insert(std::minmax(support[i], support[j]));
        }
    }
    return out;
}

/** Orderings used by the sweeps: all of them for n <= 5, else `samples` seeded shuffles plus identity. */
inline std::vector<std::vector<int>> orderings(int n, int samples, std::uint64_t seed)
{
    std::vector<std::vector<int>> out;
    std::vector<int> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 0);
    if (n <= 5) {
        do out.push_back(seq);
        while (std::next_permutation(seq.begin(), seq.end()));
        return out;
    }
    std::mt19937_64 rng(seed);
    out.push_back(seq);
    for (int i = 1; i < samples; ++i) {
        for (int j = n - 1; j > 0; --j) std::swap(seq[static_cast<std::size_t>(j)], seq[rng() % static_cast<std::uint64_t>(j + 1)]);
        out.push_back(seq);
    }
    return out;
}

/** Graph from an upper-triangle bitmask over pairs (i, j), i < j, in lexicographic order. */
inline Graph from_pair_mask(int n, std::uint32_t mask)
{
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1U) g.add_edge(i, j);
    return g;
}

/** Isomorphism classes among all labeled graphs on n vertices (n <= 6), by minimum code over all permutations. */
inline std::size_t count_isomorphism_classes(int n, bool connected_only)
{
    const int pairs = n * (n - 1) / 2;
    std::set<std::uint32_t> seen;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
        Graph g = from_pair_mask(n, mask);
        if (connected_only) {
            std::vector<char> vis(static_cast<std::size_t>(n), 0);
            std::vector<int> stack{0};
            vis[0] = 1;
            int count = n > 0 ? 1 : 0;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w = 0; w < n; ++w)
                    if (g.adjacent(v, w) && !vis[static_cast<std::size_t>(w)]) {
                        vis[static_cast<std::size_t>(w)] = 1;
                        ++count;
                        stack.push_back(w);
                    }
            }
            if (count != n) continue;
        }
        std::iota(perm.begin(), perm.end(), 0);
        std::uint32_t best = UINT32_MAX;
        do {
            std::uint32_t code = 0;
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) code |= 1U << bit;
            best = std::min(best, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        seen.insert(best);
    }
    return seen.size();
}

}  // namespace oracle

#endif  // REPCOL_TESTS_ORACLES_HPP
