#include <gtest/gtest.h>

#include "repcol/corpus.hpp"
#include "repcol/inequalities.hpp"
#include "repcol/json_io.hpp"

using namespace repcol;

TEST(ArcKey, RoundTrip)
{
    EXPECT_EQ(arc_key(Arc{0, 2}), "1,3");
    EXPECT_EQ(parse_arc_key("1,3"), (Arc{0, 2}));
    for (const char* bad : {"13", "0,1", "a,b", "1,2x", ",2"}) EXPECT_THROW(parse_arc_key(bad), ParseError) << bad;
}

TEST(PointJson, RoundTrip)
{
    PointVector p;
    p.coords[Arc{0, 2}] = Rational(1, 2);
    p.coords[Arc{1, 3}] = 1;
    Json j = to_json(p);
    EXPECT_EQ(j.dump(), R"({"1,3":"1/2","2,4":"1"})");
    EXPECT_EQ(point_from_json(j).coords, p.coords);
    EXPECT_EQ(point_from_json(Json::parse(R"({"1,3": 1})")).at(Arc{0, 2}), 1);
    EXPECT_THROW(point_from_json(Json::array()), ParseError);
    EXPECT_THROW(point_from_json(Json::parse(R"({"1,3": true})")), ParseError);
}

TEST(InequalityJson, RoundTrip)
{
    Graph c5 = cycle_graph(5);
    LinearInequality row = internal_inequality(c5, ordering_identity(c5), all_vertices(c5));
    Json j = to_json(row);
    EXPECT_EQ(j.at("family"), "internal");
    EXPECT_EQ(j.at("sense"), "<=");
    EXPECT_EQ(j.at("rhs"), "2");
    LinearInequality back = inequality_from_json(j);
    EXPECT_EQ(back.coeffs, row.coeffs);
    EXPECT_EQ(back.rhs, row.rhs);
    EXPECT_EQ(back.family, row.family);
    EXPECT_EQ(back.label, row.label);

    LinearInequality minimal = inequality_from_json(Json::parse(R"({"coeffs": {"1,2": 1}, "rhs": 1})"));
    EXPECT_EQ(minimal.sense, Sense::le);
    EXPECT_EQ(minimal.coeffs.at(Arc{0, 1}), 1);
    EXPECT_THROW(inequality_from_json(Json::parse(R"({"rhs": 1})")), ParseError);
}
