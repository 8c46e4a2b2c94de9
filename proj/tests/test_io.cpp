#include <gtest/gtest.h>

#include "superpat/cli/io.hpp"
#include "superpat/cli/random.hpp"
#include "superpat/poset/width2.hpp"

using namespace superpat;

TEST(PointSetJson, Format) {
    PointSet ps{{Rational(1, 2), Rational(3), Tag::green, std::string("v")}, {Rational(-2, 3), Rational(0), {}, {}}};
    EXPECT_EQ(to_json(ps).dump(), R"([{"x":"1/2","y":"3","tag":"green","label":"v"},{"x":"-2/3","y":"0"}])");
}

TEST(PointSetJson, RoundTrip) {
    PointSet ps{{Rational(7, 4), Rational(-5, 2), Tag::yellow, {}}, {Rational(3), Rational(1, 9), {}, std::string("x y")}};
    PointSet back = parse_pointset(to_json(ps).dump());
    ASSERT_EQ(back.size(), ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        EXPECT_EQ(back[i].x, ps[i].x);
        EXPECT_EQ(back[i].y, ps[i].y);
        EXPECT_EQ(back[i].tag, ps[i].tag);
        EXPECT_EQ(back[i].label, ps[i].label);
    }
    // integers are accepted for coordinates
    PointSet ints = parse_pointset(R"([{"x": 2, "y": 5}])");
    EXPECT_EQ(ints[0].x, Rational(2));
}

TEST(PointSetJson, Rejects) {
    EXPECT_THROW(parse_pointset("[{\"x\": \"1\"}]"), ParseError);
    EXPECT_THROW(parse_pointset("{\"x\": 1}"), ParseError);
    EXPECT_THROW(parse_pointset("[{\"x\": \"1/0\", \"y\": \"1\"}]"), Error);
    EXPECT_THROW(parse_pointset("[{\"x\": \"a\", \"y\": \"1\"}]"), ParseError);
    EXPECT_THROW(parse_pointset("[{\"x\": \"1\", \"y\": \"1\", \"tag\": \"purple\"}]"), ParseError);
    EXPECT_THROW(parse_pointset("not json"), ParseError);
}

TEST(DagJson, RoundTrip) {
    Dag g({"s", "a", "b", "t"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    EXPECT_EQ(to_json(g).dump(), R"({"vertices":["s","a","b","t"],"edges":[["s","a"],["s","b"],["a","t"],["b","t"]]})");
    Dag back = parse_dag(to_json(g).dump());
    EXPECT_EQ(back.labels(), g.labels());
    EXPECT_EQ(back.edges(), g.edges());
    EXPECT_THROW(parse_dag(R"({"vertices":["a"],"edges":[["a","z"]]})"), ParseError);
    EXPECT_THROW(parse_dag(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})"), PreconditionError);
    EXPECT_THROW(parse_dag(R"({"edges":[]})"), ParseError);
}

TEST(DrawingJson, RoundTrip) {
    Rng rng(4);
    for (int t = 0; t < 30; ++t) {
        Drawing d = width2_drawing(random_width2_dag(1 + rng.below(20), rng));
        auto j = to_json(d);
        EXPECT_TRUE(j.contains("placement"));
        Drawing back = parse_drawing(j.dump());
        EXPECT_EQ(back.graph.edges(), d.graph.edges());
        for (std::size_t v = 0; v < d.placement.size(); ++v) {
            EXPECT_EQ(back.placement[v].x, d.placement[v].x);
            EXPECT_EQ(back.placement[v].y, d.placement[v].y);
            EXPECT_EQ(back.placement[v].label, d.graph.label(v));
        }
    }
    EXPECT_THROW(parse_drawing(R"({"vertices":["a"],"edges":[],"placement":{}})"), ParseError);
}

TEST(StOuterplanarJson, RoundTrip) {
    StOuterplanarGraph g{{"s", "a1", "a2", "t"}, {"s", "b1", "b2", "t"}, {{"b1", "a2", Direction::up}}};
    EXPECT_EQ(to_json(g).dump(),
              R"({"top":["s","a1","a2","t"],"bottom":["s","b1","b2","t"],"interior":[{"from":"b1","to":"a2","dir":"up"}]})");
    Rng rng(8);
    for (int t = 0; t < 30; ++t) {
        auto r = random_st_outerplanar(4 + rng.below(30), rng);
        auto back = parse_st_outerplanar(to_json(r).dump());
        EXPECT_EQ(to_json(back), to_json(r));
    }
    EXPECT_THROW(parse_st_outerplanar(R"({"top":["s","t"],"bottom":["s","t"],"interior":[{"from":"s","to":"t","dir":"left"}]})"),
                 ParseError);
    EXPECT_THROW(parse_st_outerplanar(R"({"top":["s","t"]})"), ParseError);
}

TEST(QuadSetJson, Squares) {
    QuadSet q = build_Q(4);
    auto j = to_json(q);
    EXPECT_EQ(j.at("m"), 4);
    EXPECT_EQ(j.at("points").size(), q.points.size());
    EXPECT_EQ(j.at("squares").size(), 3u);
    EXPECT_EQ(j.at("squares")[1].at("lo"), 1);
    EXPECT_EQ(j.at("squares")[1].at("hi"), 2);
    EXPECT_EQ(j.at("squares")[1].at("green").size(), 2u);
    // a QuadSet document reads back as its points
    EXPECT_EQ(parse_pointset(j.dump()).size(), q.points.size());
}
