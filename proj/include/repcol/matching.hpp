#ifndef REPCOL_MATCHING_HPP
#define REPCOL_MATCHING_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "repcol/graph.hpp"
#include "repcol/rational.hpp"

namespace repcol {

using Matching = std::vector<Edge>;  // sorted, pairwise disjoint
using EdgeWeights = std::map<Edge, Rational>;

namespace detail {

/**
 * Edmonds' blossom algorithm for maximum-cardinality matching in a general
 * graph, O(V^3). `mate[v] == -1` marks an exposed vertex. Vertices flagged
 * in `blocked` are left out of the graph.
 */
class BlossomMatcher
{
    public:
        BlossomMatcher(const Graph& g, const std::vector<char>& blocked)
            : g_(g), blocked_(blocked), n_(g.order()),
              mate_(static_cast<std::size_t>(n_), -1), parent_(static_cast<std::size_t>(n_)),
              base_(static_cast<std::size_t>(n_)), used_(static_cast<std::size_t>(n_)),
              in_blossom_(static_cast<std::size_t>(n_))
        {
        }

        std::vector<Vertex> run()
        {
            // greedy start
            for (Vertex v = 0; v < n_; ++v) {
                if (blocked(v) || mate(v) != -1) continue;
                for (Vertex w = 0; w < n_; ++w)
                    if (w != v && !blocked(w) && mate(w) == -1 && g_.adjacent(v, w)) {
                        mate_[idx(v)] = w;
                        mate_[idx(w)] = v;
                        break;
                    }
            }
            for (Vertex root = 0; root < n_; ++root) {
                if (blocked(root) || mate(root) != -1) continue;
                Vertex v = find_augmenting_path(root);
                while (v != -1) {
                    Vertex pv = parent_[idx(v)];
                    Vertex next = mate(pv);
                    mate_[idx(v)] = pv;
                    mate_[idx(pv)] = v;
                    v = next;
                }
            }
            return mate_;
        }

    private:
        static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }
        bool blocked(Vertex v) const { return blocked_[idx(v)] != 0; }
        Vertex mate(Vertex v) const { return mate_[idx(v)]; }

        Vertex lca(Vertex a, Vertex b)
        {
            std::vector<char> seen(static_cast<std::size_t>(n_), 0);
            for (;;) {
                a = base_[idx(a)];
                seen[idx(a)] = 1;
                if (mate(a) == -1) break;
                a = parent_[idx(mate(a))];
            }
            for (;;) {
                b = base_[idx(b)];
                if (seen[idx(b)]) return b;
                b = parent_[idx(mate(b))];
            }
        }

        void mark_path(Vertex v, Vertex b, Vertex child)
        {
            while (base_[idx(v)] != b) {
                in_blossom_[idx(base_[idx(v)])] = in_blossom_[idx(base_[idx(mate(v))])] = 1;
                parent_[idx(v)] = child;
                child = mate(v);
                v = parent_[idx(mate(v))];
            }
        }

        Vertex find_augmenting_path(Vertex root)
        {
            std::fill(used_.begin(), used_.end(), 0);
            std::fill(parent_.begin(), parent_.end(), -1);
            for (Vertex i = 0; i < n_; ++i) base_[idx(i)] = i;
            used_[idx(root)] = 1;
            std::queue<Vertex> q;
            q.push(root);
            while (!q.empty()) {
                Vertex v = q.front();
                q.pop();
                for (Vertex to = 0; to < n_; ++to) {
                    if (to == v || blocked(to) || !g_.adjacent(v, to)) continue;
                    if (base_[idx(v)] == base_[idx(to)] || mate(v) == to) continue;
                    if (to == root || (mate(to) != -1 && parent_[idx(mate(to))] != -1)) {
                        Vertex cur = lca(v, to);
                        std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                        mark_path(v, cur, to);
                        mark_path(to, cur, v);
                        for (Vertex i = 0; i < n_; ++i)
                            if (in_blossom_[idx(base_[idx(i)])]) {
                                base_[idx(i)] = cur;
                                if (!used_[idx(i)]) {
                                    used_[idx(i)] = 1;
                                    q.push(i);
                                }
                            }
                    } else if (parent_[idx(to)] == -1) {
                        parent_[idx(to)] = v;
                        if (mate(to) == -1) return to;
                        used_[idx(mate(to))] = 1;
                        q.push(mate(to));
                    }
                }
            }
            return -1;
        }

        const Graph& g_;
        const std::vector<char>& blocked_;
        int n_;
        std::vector<Vertex> mate_;
        std::vector<Vertex> parent_;
        std::vector<Vertex> base_;
        std::vector<char> used_;
        std::vector<char> in_blossom_;
};

/** Exact max-weight matching by subset recursion over the free vertices. */
class SubsetWeightedMatcher
{
    public:
        SubsetWeightedMatcher(const Graph& g, const EdgeWeights& w, std::vector<Vertex> free)
            : g_(g), w_(w), free_(std::move(free)),
              memo_(std::size_t{1} << free_.size())
        {
        }

        Matching run()
        {
            std::uint32_t all = free_.empty() ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << free_.size()) - 1);
            Matching m;
            reconstruct(all, m);
            std::sort(m.begin(), m.end());
            return m;
        }

    private:
        Rational weight(Vertex a, Vertex b) const
        {
            auto it = w_.find(Edge(a, b));
            return it == w_.end() ? Rational(0) : it->second;
        }

        const Rational& best(std::uint32_t mask)
        {
            auto& slot = memo_[mask];
            if (slot) return *slot;
            if (mask == 0) return slot.emplace(0);
            int i = __builtin_ctz(mask);
            std::uint32_t rest = mask & ~(1u << i);
            Rational value = best(rest);
            for (std::uint32_t m = rest; m; m &= m - 1) {
                int j = __builtin_ctz(m);
                Vertex a = free_[static_cast<std::size_t>(i)], b = free_[static_cast<std::size_t>(j)];
                if (!g_.adjacent(a, b)) continue;
                Rational cand = weight(a, b) + best(rest & ~(1u << j));
                if (cand > value) value = cand;
            }
            return slot.emplace(std::move(value));
        }

        void reconstruct(std::uint32_t mask, Matching& out)
        {
            while (mask) {
                int i = __builtin_ctz(mask);
                std::uint32_t rest = mask & ~(1u << i);
                const Rational target = best(mask);
                if (best(rest) == target) {
                    mask = rest;
                    continue;
                }
                bool found = false;
                for (std::uint32_t m = rest; m; m &= m - 1) {
                    int j = __builtin_ctz(m);
                    Vertex a = free_[static_cast<std::size_t>(i)], b = free_[static_cast<std::size_t>(j)];
                    if (!g_.adjacent(a, b)) continue;
                    if (weight(a, b) + best(rest & ~(1u << j)) == target) {
                        out.emplace_back(a, b);
                        mask = rest & ~(1u << j);
                        found = true;
                        break;
                    }
                }
                if (!found) break;  // unreachable: target is attained by some branch
            }
        }

        const Graph& g_;
        const EdgeWeights& w_;
        std::vector<Vertex> free_;
        std::vector<std::optional<Rational>> memo_;
};

}  // namespace detail

/** Largest graph order accepted by the weighted (exponential) matcher. */
inline constexpr int kWeightedMatchingCap = 20;

/**
 * Maximum matching containing every forced edge. Without weights the
 * cardinality is maximized (blossom algorithm); with weights the total
 * weight is maximized exactly, which is exponential and capped at
 * kWeightedMatchingCap free vertices. Missing weights count as zero.
 */
inline Matching maximum_matching(const Graph& g, const std::optional<EdgeWeights>& weights = std::nullopt,
                                 const std::vector<Edge>& forced = {})
{
    std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : forced) {
        g.check_vertex(e.u);
        g.check_vertex(e.v);
        if (!g.adjacent(e.u, e.v))
            throw InvalidInput("forced edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not in the graph");
        if (blocked[static_cast<std::size_t>(e.u)] || blocked[static_cast<std::size_t>(e.v)])
            throw InvalidInput("forced edges share an endpoint");
        blocked[static_cast<std::size_t>(e.u)] = blocked[static_cast<std::size_t>(e.v)] = 1;
    }

    Matching result(forced.begin(), forced.end());
    if (!weights) {
        std::vector<Vertex> mate = detail::BlossomMatcher(g, blocked).run();
        for (Vertex v = 0; v < g.order(); ++v)
            if (mate[static_cast<std::size_t>(v)] > v) result.emplace_back(v, mate[static_cast<std::size_t>(v)]);
    } else {
        std::vector<Vertex> free;
        for (Vertex v = 0; v < g.order(); ++v)
            if (!blocked[static_cast<std::size_t>(v)]) free.push_back(v);
        if (static_cast<int>(free.size()) > kWeightedMatchingCap)
            throw CapExceeded("weighted matching is exact only up to " + std::to_string(kWeightedMatchingCap) +
                              " free vertices");
        Matching m = detail::SubsetWeightedMatcher(g, *weights, std::move(free)).run();
        result.insert(result.end(), m.begin(), m.end());
    }
    std::sort(result.begin(), result.end());
    return result;
}

inline bool is_matching(const Graph& g, const Matching& m)
{
    std::vector<char> hit(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : m) {
        if (!g.adjacent(e.u, e.v)) return false;
        if (hit[static_cast<std::size_t>(e.u)] || hit[static_cast<std::size_t>(e.v)]) return false;
        hit[static_cast<std::size_t>(e.u)] = hit[static_cast<std::size_t>(e.v)] = 1;
    }
    return true;
}

}  // namespace repcol

#endif  // REPCOL_MATCHING_HPP
