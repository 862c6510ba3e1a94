#include <gtest/gtest.h>

#include "oracles.hpp"
#include "repcol/corpus.hpp"
#include "repcol/double_description.hpp"
#include "repcol/inequalities.hpp"
#include "repcol/polytope_lab.hpp"

using namespace repcol;

namespace {

std::set<ArcMask> oracle_masks(const Graph& g, const std::vector<int>& seq, const std::vector<int>& color = {})
{
    RepGraph r = build_rep(g, VertexOrdering::from_sequence(seq));
    std::set<ArcMask> out;
    for (const auto& block : oracle::stable_partitions(g)) {
        if (!color.empty() && !oracle::respects(block, color)) continue;
        ArcMask m = 0;
        for (const auto& [t, h] : oracle::encode(block, seq)) m |= ArcMask{1} << r.index_of(t, h);
        out.insert(m);
    }
    return out;
}

std::set<ArcMask> as_set(const VertexSetEnumeration& e) { return {e.points.begin(), e.points.end()}; }

/** Solves the square system A x = b exactly; nullopt when singular. */
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t d = b.size();
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && a[piv][col] == 0) ++piv;
        if (piv == d) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = 0; c < d; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = b[i] / a[i][i];
    return x;
}

/** Best objective over basic feasible points of {rows, 0 <= x <= 1}, by choosing d tight constraints. */
Rational brute_force_lp(int d, const std::vector<DenseRow>& rows, const std::vector<Rational>& c)
{
    std::vector<DenseRow> all = rows;
    for (int i = 0; i < d; ++i) {
        DenseRow lo, hi;
        lo.a.assign(static_cast<std::size_t>(d), 0);
        lo.a[static_cast<std::size_t>(i)] = -1;
        hi.a.assign(static_cast<std::size_t>(d), 0);
        hi.a[static_cast<std::size_t>(i)] = 1;
        hi.b = 1;
        all.push_back(lo);
        all.push_back(hi);
    }
    std::optional<Rational> best;
    const std::size_t m = all.size();
    for (std::uint32_t pick = 0; pick < (1U << m); ++pick) {
        if (std::popcount(pick) != d) continue;
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        for (int i : oracle::members(pick)) {
            a.push_back(all[static_cast<std::size_t>(i)].a);
            b.push_back(all[static_cast<std::size_t>(i)].b);
        }
        auto x = solve_square(a, b);
        if (!x) continue;
        if (!std::all_of(all.begin(), all.end(), [&](const DenseRow& r) { return r.holds(*x); })) continue;
        Rational v = 0;
        for (int i = 0; i < d; ++i) v += c[static_cast<std::size_t>(i)] * (*x)[static_cast<std::size_t>(i)];
        if (!best || v > *best) best = v;
    }
    return *best;
}

}  // namespace

TEST(EnumerateColorings, Examples)
{
    Graph p3 = path_graph(3);
    auto e = enumerate_colorings(p3, ordering_identity(p3));
    EXPECT_EQ(e.points, (std::vector<ArcMask>{0, 1}));
    EXPECT_EQ(e.arcs, (std::vector<Arc>{{0, 2}}));

    Graph k4 = complete_graph(4);
    EXPECT_EQ(enumerate_colorings(k4, ordering_identity(k4)).points, (std::vector<ArcMask>{0}));

    Graph s2(2);
    EXPECT_EQ(enumerate_colorings(s2, ordering_identity(s2), Precoloring(2, {{0, 1}, {1, 2}})).points,
              (std::vector<ArcMask>{0}));
    EXPECT_EQ(enumerate_colorings(s2, ordering_identity(s2), Precoloring(2, {{0, 1}, {1, 1}})).points,
              (std::vector<ArcMask>{1}));
}

TEST(EnumerateColorings, MatchesPartitionOracle)
{
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n))
            for (const auto& seq : oracle::orderings(n, 2, 11)) {
                auto ord = VertexOrdering::from_sequence(seq);
                ASSERT_EQ(as_set(enumerate_colorings(g, ord)), oracle_masks(g, seq));
                std::vector<int> color(static_cast<std::size_t>(n), 0);
                for (int v = 0; v < n; ++v) {
                    int c = static_cast<int>(rng() % 3);
                    for (int u = 0; u < v && c; ++u)
                        if (g.adjacent(u, v) && color[static_cast<std::size_t>(u)] == c) c = 0;
                    color[static_cast<std::size_t>(v)] = c;
                }
                Precoloring rho;
                rho.color = color;
                ASSERT_EQ(as_set(enumerate_colorings(g, ord, rho)), oracle_masks(g, seq, color));
            }
}

TEST(EnumerateColorings, Caps)
{
    Graph big(9);
    EXPECT_THROW(enumerate_colorings(big, ordering_identity(big)), CapExceeded);
    Graph k3 = complete_graph(3);
    EXPECT_THROW(enumerate_colorings(k3, ordering_identity(Graph(2))), InvalidInput);
}

TEST(EnumerateStableSets, Examples)
{
    Graph s3(3);
    RepGraph r = build_rep(s3, ordering_identity(s3));
    auto e = enumerate_stable_sets(r);
    EXPECT_EQ(e.size(), 5U);  // empty, three singletons, the one non-adjacent pair
    EXPECT_TRUE(e.contains(0b011));

    RepGraph empty;
    empty.n = 4;
    empty.arcs = {{0, 1}, {0, 2}, {0, 3}};
    empty.adjacency = Graph(3);
    EXPECT_EQ(enumerate_stable_sets(empty).size(), 8U);
    empty.adjacency = complete_graph(3);
    EXPECT_EQ(enumerate_stable_sets(empty).size(), 4U);
}

TEST(CoLToStab, Examples)
{
    Graph k4 = complete_graph(4);
    EXPECT_TRUE(verify_coltostab(k4, ordering_identity(k4)));
    Graph c5 = cycle_graph(5);
    auto id = ordering_identity(c5);
    EXPECT_TRUE(verify_coltostab(c5, id));
    EXPECT_EQ(enumerate_colorings(c5, id).size(), 11U);
    EXPECT_EQ(enumerate_stable_sets(build_rep(c5, id)).size(), 11U);
}

TEST(CoLToStab, StableSetsMatchOracle)
{
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n))
            for (const auto& seq : oracle::orderings(n, 1, 19)) {
                RepGraph r = build_rep(g, VertexOrdering::from_sequence(seq));
                std::set<ArcMask> expected;
                for (std::uint32_t m = 0; m < (1U << r.size()); ++m)
                    if (oracle::is_stable(r.adjacency, oracle::members(m))) expected.insert(m);
                ASSERT_EQ(as_set(enumerate_stable_sets(r)), expected);
                ASSERT_TRUE(verify_coltostab(g, VertexOrdering::from_sequence(seq)));
            }
}

TEST(PreextIdentity, Examples)
{
    Graph s2(2);
    EXPECT_TRUE(verify_preext_identity(s2, Precoloring(2, {{0, 1}, {1, 1}}), ordering_identity(s2)));
    Graph c5 = cycle_graph(5);
    EXPECT_TRUE(verify_preext_identity(c5, Precoloring(5), ordering_identity(c5)));
    Graph s3(3);
    Precoloring rho(3, {{1, 1}, {2, 2}});
    EXPECT_TRUE(verify_preext_identity(s3, rho, ordering_consistent(s3, rho)));
}

TEST(AffineDimension, Examples)
{
    EXPECT_EQ(affine_dimension(std::vector<std::vector<Rational>>{{1, 0, 1}}), 0);
    EXPECT_EQ(affine_dimension(std::vector<std::vector<Rational>>{{0, 0}, {1, 0}, {0, 1}}), 2);
    EXPECT_EQ(affine_dimension(std::vector<std::vector<Rational>>{{0, 0}, {1, 1}, {2, 2}}), 1);
    Graph c5 = cycle_graph(5);
    EXPECT_EQ(affine_dimension(enumerate_colorings(c5, ordering_identity(c5))), 5);
    EXPECT_THROW(affine_dimension(std::vector<std::vector<Rational>>{}), InvalidInput);
}

TEST(IsFacet, Examples)
{
    Graph c5 = cycle_graph(5);
    auto id = ordering_identity(c5);
    EXPECT_TRUE(is_facet(internal_inequality(c5, id, all_vertices(c5)), c5, id));
    LinearInequality loose;
    loose.rhs = 1;
    EXPECT_FALSE(is_facet(loose, c5, id));
    LinearInequality nn;
    nn.coeffs[Arc{0, 2}] = 1;
    nn.sense = Sense::ge;
    EXPECT_TRUE(is_facet(nn, c5, id));
    LinearInequality invalid;
    invalid.coeffs[Arc{0, 2}] = 1;
    invalid.coeffs[Arc{0, 3}] = 1;
    invalid.rhs = 0;
    EXPECT_FALSE(is_facet(invalid, c5, id));
    Graph c7 = cycle_graph(7);
    EXPECT_TRUE(is_facet(internal_inequality(c7, ordering_identity(c7), all_vertices(c7)), c7, ordering_identity(c7)));
}

TEST(MatchSubset, Examples)
{
    Graph k4 = complete_graph(4);
    EXPECT_TRUE(verify_match_subset(k4, ordering_identity(k4)));
    Graph c5 = cycle_graph(5);
    auto id = ordering_identity(c5);
    EXPECT_EQ(enumerate_matchings(c5, id).points, enumerate_colorings(c5, id).points);
}

TEST(PolytopeInvariants, CorpusProperties)
{
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n))
            for (const auto& seq : oracle::orderings(n, 2, 23)) {
                auto ord = VertexOrdering::from_sequence(seq);
                auto col = enumerate_colorings(g, ord);
                ASSERT_EQ(affine_dimension(col), static_cast<int>(col.arcs.size()));
                int best = 0;
                for (ArcMask m : col.points) best = std::max(best, std::popcount(m));
                ASSERT_EQ(best, n - oracle::chi(g));
                ASSERT_TRUE(verify_match_subset(g, ord));
                std::set<ArcMask> matchings;
                for (const auto& mt : oracle::all_matchings(complement(g))) {
                    ArcMask m = 0;
                    RepGraph r = build_rep(g, ord);
                    for (const Edge& e : mt) m |= ArcMask{1} << r.index_of(e.u, e.v);
                    matchings.insert(m);
                }
                ASSERT_EQ(as_set(enumerate_matchings(g, ord)), matchings);
                if (oracle::alpha(g) <= 2) {
                    ASSERT_EQ(as_set(col), matchings);
                }
            }
}

TEST(Characterization, C5MatchingSystemBothModes)
{
    Graph c5 = cycle_graph(5);
    auto id = ordering_identity(c5);
    auto system = orient_on_arcs(matching_system(complement(c5), 5), id);
    EXPECT_TRUE(verify_characterization(c5, id, system, HullCompare{}));
    EXPECT_TRUE(verify_characterization(c5, id, system, LpObjectiveProbe{}));
}

TEST(Characterization, DegreeRowsAloneFail)
{
    Graph c5 = cycle_graph(5);
    auto id = ordering_identity(c5);
    std::vector<LinearInequality> degree;
    for (const auto& row : orient_on_arcs(matching_system(complement(c5), 1), id)) degree.push_back(row);
    Verdict v = verify_characterization(c5, id, degree, HullCompare{});
    EXPECT_FALSE(v);
    EXPECT_NE(v.witness.find("1/2,1/2,1/2,1/2,1/2"), std::string::npos) << v.witness;
    // the all-ones objective exposes the same point to the simplex
    RepGraph r = build_rep(c5, id);
    LinearProgram lp;
    lp.num_vars = r.size();
    lp.rows = detail::dense_system(r, degree);
    lp.objective.assign(5, 1);
    EXPECT_EQ(solve_lp(lp).value, Rational(5, 2));
}

TEST(Characterization, StableTripleThroughCoPawGraph)
{
    Graph s3(3);
    auto id = ordering_identity(s3);
    auto aux = build_H_G(s3, id);
    ASSERT_TRUE(aux);
    auto system = map_to_arcs(matching_system(aux->graph, 9), *aux);
    EXPECT_TRUE(verify_characterization(s3, id, system, HullCompare{}));
    EXPECT_TRUE(verify_characterization(s3, id, system, LpObjectiveProbe{50, 3}));
    // the plain matching system on the complement cuts off a coloring vector
    EXPECT_FALSE(verify_characterization(s3, id, orient_on_arcs(matching_system(complement(s3), 9), id), HullCompare{}));
}

TEST(Characterization, AlphaTwoCorpusBothModesAgree)
{
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n)) {
            if (oracle::alpha(g) > 2) continue;
            auto ord = VertexOrdering::from_sequence(oracle::orderings(n, 1, 47).back());
            auto system = orient_on_arcs(matching_system(complement(g), 9), ord);
            bool probe = verify_characterization(g, ord, system, LpObjectiveProbe{20, 9});
            ASSERT_TRUE(probe);
            if (build_rep(g, ord).size() <= 8) {
                ASSERT_TRUE(verify_characterization(g, ord, system, HullCompare{}));
            }
        }
}

TEST(ExactSimplex, MatchingNumberOfC5)
{
    Graph c5 = cycle_graph(5);
    RepGraph r = build_rep(c5, ordering_identity(c5));
    LinearProgram lp;
    lp.num_vars = r.size();
    lp.rows = detail::dense_system(r, orient_on_arcs(matching_system(complement(c5), 5), ordering_identity(c5)));
    lp.objective.assign(5, 1);
    LpResult res = solve_lp(lp);
    ASSERT_EQ(res.status, LpStatus::optimal);
    EXPECT_EQ(res.value, 2);
    EXPECT_EQ(res.value, oracle::matching_number(complement(c5)));
    EXPECT_EQ(solve_lp_lazy(lp).value, 2);
}

TEST(ExactSimplex, AgreesWithBruteForceOnRandomSystems)
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 2);
        const int m = 1 + static_cast<int>(rng() % 4);
        LinearProgram lp;
        lp.num_vars = d;
        for (int i = 0; i < m; ++i) {
            DenseRow row;
            row.a = probe_objective(rng, static_cast<std::size_t>(d));
            row.b = Rational(static_cast<long>(rng() % 7), 2);
            row.sense = Sense::le;
            lp.rows.push_back(row);
        }
        lp.objective = probe_objective(rng, static_cast<std::size_t>(d));
        LpResult res = solve_lp(lp);
        ASSERT_EQ(res.status, LpStatus::optimal);  // the origin is always feasible
        ASSERT_EQ(res.value, brute_force_lp(d, lp.rows, lp.objective));
        ASSERT_EQ(solve_lp_lazy(lp).value, res.value);

        auto vertices = enumerate_vertices(d, lp.rows);
        Rational best = 0;
        for (std::size_t k = 0; k < vertices.size(); ++k) {
            Rational v = 0;
            for (int i = 0; i < d; ++i) v += lp.objective[static_cast<std::size_t>(i)] * vertices[k][static_cast<std::size_t>(i)];
            if (k == 0 || v > best) best = v;
        }
        ASSERT_EQ(best, res.value);
    }
}

TEST(ExactSimplex, InfeasibleAndEquality)
{
    LinearProgram lp;
    lp.num_vars = 1;
    lp.objective = {1};
    DenseRow ge;
    ge.a = {1};
    ge.sense = Sense::ge;
    ge.b = 2;
    lp.rows = {ge};
    EXPECT_EQ(solve_lp(lp).status, LpStatus::infeasible);
    DenseRow eq;
    eq.a = {1};
    eq.sense = Sense::eq;
    eq.b = Rational(1, 3);
    lp.rows = {eq};
    LpResult res = solve_lp(lp);
    ASSERT_EQ(res.status, LpStatus::optimal);
    EXPECT_EQ(res.value, Rational(1, 3));
    lp.unit_box = false;
    lp.rows.clear();
    EXPECT_EQ(solve_lp(lp).status, LpStatus::unbounded);
}

TEST(CliqueFamilySystem, KiteFreeComplementsPassProbe)
{
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n)) {
            if (contains_subgraph(complement(g), pattern_graph(Pattern::kite))) continue;
            auto ord = ordering_identity(g);
            if (build_rep(g, ord).size() > 10) continue;
            CliqueFamilySystem sys = clique_family_system(g, ord, 6);
            ASSERT_TRUE(verify_characterization(g, ord, sys.rows, LpObjectiveProbe{15, 2}));
        }
}
