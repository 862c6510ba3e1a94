#include <gtest/gtest.h>

#include "oracles.hpp"
#include "repcol/corpus.hpp"
#include "repcol/json_io.hpp"
#include "repcol/solvers.hpp"

using namespace repcol;

namespace {

/** Partition, encoding and count invariants of a returned solution. */
void expect_well_formed(const Graph& g, const ColoringSolution& s)
{
    std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
    for (const VertexSet& cls : s.classes) {
        ASSERT_TRUE(oracle::is_stable(g, std::vector<int>(cls.begin(), cls.end())));
        for (Vertex v : cls) ++seen[static_cast<std::size_t>(v)];
    }
    for (int c : seen) ASSERT_EQ(c, 1);
    ASSERT_EQ(s.colors_used, static_cast<int>(s.classes.size()));
    int set = 0;
    for (const auto& [a, q] : s.vector.coords)
        if (q == 1) ++set;
    ASSERT_EQ(s.colors_used, g.order() - set);
    ASSERT_EQ(encode_partition(g, s.ordering, s.classes).coords, s.vector.coords);
}

std::vector<int> random_precoloring(const Graph& g, std::mt19937_64& rng, int colors)
{
    std::vector<int> color(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        int c = static_cast<int>(rng() % static_cast<std::uint64_t>(colors + 1));
        for (Vertex u = 0; u < v && c; ++u)
            if (g.adjacent(u, v) && color[static_cast<std::size_t>(u)] == c) c = 0;
        color[static_cast<std::size_t>(v)] = c;
    }
    return color;
}

}  // namespace

TEST(MatchingSolver, Examples)
{
    EXPECT_EQ(solve_coloring_matching(cycle_graph(5)).colors_used, 3);
    EXPECT_EQ(solve_coloring_matching(complete_graph(4)).colors_used, 4);
    Graph co_pm = complement(Graph(6, {{0, 1}, {2, 3}, {4, 5}}));
    ColoringSolution s = solve_coloring_matching(co_pm);
    EXPECT_EQ(s.colors_used, 3);
    EXPECT_EQ(s.classes, (std::vector<VertexSet>{{0, 1}, {2, 3}, {4, 5}}));
    EXPECT_THROW(solve_coloring_matching(Graph(3)), InvalidInput);
}

TEST(MatchingSolver, AgreesWithChromaticNumber)
{
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : all_graphs(n)) {
            if (oracle::alpha(g) > 2) continue;
            ColoringSolution s = solve_coloring_matching(g);
            ASSERT_EQ(s.colors_used, oracle::chi(g));
            expect_well_formed(g, s);
            ModelSpec m = build_model(g, s.ordering, Variant::compact, ColoringProblem{});
            ASSERT_TRUE(check_point(m, s.vector));
        }
}

TEST(PrecolorSolver, Examples)
{
    Graph c5 = cycle_graph(5);
    ColoringSolution same = solve_precolor_ext_matching(c5, Precoloring(5, {{0, 1}, {2, 1}}));
    EXPECT_EQ(same.colors_used, 3);
    EXPECT_NE(std::find(same.classes.begin(), same.classes.end(), VertexSet{0, 2}), same.classes.end());

    std::vector<int> color{1, 0, 2, 0, 0};
    ColoringSolution split = solve_precolor_ext_matching(c5, Precoloring(5, {{0, 1}, {2, 2}}));
    EXPECT_EQ(split.colors_used, *oracle::min_extension(c5, color));
    for (const VertexSet& cls : split.classes)
        EXPECT_FALSE(std::find(cls.begin(), cls.end(), 0) != cls.end() && std::find(cls.begin(), cls.end(), 2) != cls.end());

    EXPECT_EQ(solve_precolor_ext_matching(c5, Precoloring(5)).colors_used, solve_coloring_matching(c5).colors_used);

    EXPECT_THROW(solve_precolor_ext_matching(c5, Precoloring(5, {{0, 1}, {1, 1}})), InvalidInput);
    EXPECT_THROW(solve_precolor_ext_matching(Graph(3), Precoloring(3)), InvalidInput);
}

TEST(PrecolorSolver, AgreesWithExhaustiveExtension)
{
    std::mt19937_64 rng(101);
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : all_graphs(n)) {
            if (oracle::alpha(g) > 2) continue;
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<int> color = random_precoloring(g, rng, 3);
                Precoloring rho;
                rho.color = color;
                auto expected = oracle::min_extension(g, color);
                ASSERT_TRUE(expected);  // classes have size <= 2 when alpha <= 2
                ColoringSolution s = solve_precolor_ext_matching(g, rho);
                ASSERT_EQ(s.colors_used, *expected);
                expect_well_formed(g, s);
                ModelSpec m = build_model(g, s.ordering, Variant::compact, PrecolorExtProblem{rho});
                ASSERT_TRUE(check_point(m, s.vector));
            }
        }
}

TEST(ExactSolver, Examples)
{
    Graph c5 = cycle_graph(5);
    ColoringSolution s = solve_exact(c5, ordering_identity(c5), ColoringProblem{});
    EXPECT_EQ(s.colors_used, 3);
    EXPECT_EQ(s.objective, 3);

    Graph s3(3);
    WeightFunction w{{5, 3, 2}};
    ColoringSolution mc = solve_exact(s3, ordering_by_weight(s3, w), MaxColoringProblem{w});
    EXPECT_EQ(mc.classes, (std::vector<VertexSet>{{0, 1, 2}}));
    EXPECT_EQ(mc.objective, 5);

    Graph k5 = complete_graph(5);
    EXPECT_EQ(solve_exact(k5, ordering_identity(k5), ColoringProblem{}).colors_used, 5);
}

TEST(ExactSolver, PrecoloringInputs)
{
    Graph s2(2);
    Precoloring rho(2, {{0, 1}, {1, 1}});
    ColoringSolution ok = solve_exact(s2, ordering_identity(s2), PrecolorExtProblem{rho});
    EXPECT_EQ(ok.colors_used, 1);
    Graph p2 = path_graph(2);
    EXPECT_THROW(solve_exact(p2, ordering_identity(p2), PrecolorExtProblem{Precoloring(2, {{0, 1}, {1, 1}})}),
                 InvalidInput);
}

TEST(ExactSolver, ColoringAgreesWithChromaticNumber)
{
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n))
            for (const auto& seq : oracle::orderings(n, 1, 53)) {
                auto ord = VertexOrdering::from_sequence(seq);
                ColoringSolution s = solve_exact(g, ord, ColoringProblem{});
                ASSERT_EQ(s.colors_used, oracle::chi(g));
                ASSERT_EQ(s.objective, s.colors_used);
                expect_well_formed(g, s);
                ASSERT_TRUE(check_point(build_model(g, ord, Variant::compact, ColoringProblem{}), s.vector));
            }
}

TEST(ExactSolver, MaxColoringAgreesWithExhaustiveMinimum)
{
    std::mt19937_64 rng(59);
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n)) {
            std::vector<Rational> w(static_cast<std::size_t>(n));
            for (auto& x : w) x = Rational(static_cast<long>(1 + rng() % 10), static_cast<long>(1 + rng() % 3));
            WeightFunction wf{w};
            auto ord = ordering_by_weight(g, wf);
            ColoringSolution s = solve_exact(g, ord, MaxColoringProblem{wf});
            ASSERT_EQ(s.objective, oracle::min_max_coloring(g, w));
            Rational cost = 0;
            for (const VertexSet& cls : s.classes) {
                Rational mx = 0;
                for (Vertex v : cls) mx = std::max(mx, w[static_cast<std::size_t>(v)]);
                cost += mx;
            }
            ASSERT_EQ(cost, s.objective);
            expect_well_formed(g, s);
            ASSERT_TRUE(check_point(build_model(g, ord, Variant::compact, MaxColoringProblem{wf}), s.vector));
        }
}

TEST(ExactSolver, PrecolorAgreesWithExhaustiveExtension)
{
    std::mt19937_64 rng(61);
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n)) {
            std::vector<int> color = random_precoloring(g, rng, 3);
            Precoloring rho;
            rho.color = color;
            auto ord = ordering_consistent(g, rho);
            auto expected = oracle::min_extension(g, color);
            if (!expected) {
                EXPECT_THROW(solve_exact(g, ord, PrecolorExtProblem{rho}), Infeasible);
                continue;
            }
            ColoringSolution s = solve_exact(g, ord, PrecolorExtProblem{rho});
            ASSERT_EQ(s.colors_used, *expected);
            expect_well_formed(g, s);
            ASSERT_TRUE(check_point(build_model(g, ord, Variant::compact, PrecolorExtProblem{rho}), s.vector));
        }
}

TEST(ExactSolver, TieBreakIsDeterministic)
{
    Graph c5 = cycle_graph(5);
    auto id = ordering_identity(c5);
    ColoringSolution a = solve_exact(c5, id, ColoringProblem{});
    ColoringSolution b = solve_exact(c5, id, ColoringProblem{});
    EXPECT_EQ(a.vector.coords, b.vector.coords);
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(Encoding, RoundTrip)
{
    Graph c5 = cycle_graph(5);
    auto id = ordering_identity(c5);
    std::vector<VertexSet> classes{{0, 2}, {1, 3}, {4}};
    PointVector p = encode_partition(c5, id, classes);
    std::vector<Arc> chosen;
    for (const auto& [a, q] : p.coords)
        if (q == 1) chosen.push_back(a);
    EXPECT_EQ(chosen, (std::vector<Arc>{{0, 2}, {1, 3}}));
    EXPECT_EQ(decode_arcs(5, chosen), classes);
}

TEST(SolutionJson, Layout)
{
    Graph p3 = path_graph(3);
    Json j = to_json(solve_exact(p3, ordering_identity(p3), ColoringProblem{}));
    EXPECT_EQ(j.dump(), R"({"colors_used":2,"classes":[[1,3],[2]],"objective":"2","vector":{"1,3":"1"}})");
}
