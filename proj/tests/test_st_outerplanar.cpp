#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "superpat/cli/random.hpp"
#include "superpat/outerplanar/embed.hpp"
#include "superpat/perm/pattern.hpp"
#include "superpat/superpattern/riffle.hpp"
#include "test_oracles.hpp"

using namespace superpat;

namespace {

InteriorEdge up(std::string from, std::string to) { return {std::move(from), std::move(to), Direction::up}; }
InteriorEdge down(std::string from, std::string to) { return {std::move(from), std::move(to), Direction::down}; }

StOuterplanarGraph single_edge() { return {{"s", "t"}, {"s", "t"}, {}}; }

// s a1 a2 t over s b1 b2 t with b1 -> a2.
StOuterplanarGraph parallel_with_up() {
    return {{"s", "a1", "a2", "t"}, {"s", "b1", "b2", "t"}, {up("b1", "a2")}};
}

// One upward then one downward edge; green path b2 b3 between them.
StOuterplanarGraph up_then_down() {
    return {{"s", "a1", "a2", "a3", "a4", "t"}, {"s", "b1", "b2", "b3", "b4", "t"}, {up("b1", "a2"), down("a3", "b4")}};
}

std::set<std::string> names(const Dag& g, const std::vector<std::size_t>& vs) {
    std::set<std::string> out;
    for (auto v : vs) {
        out.insert(g.label(v));
    }
    return out;
}

// Reachability of the graph by closure of its edge list, for comparison with
// the drawing.
std::vector<std::vector<char>> closure(const Dag& g) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (auto [u, v] : g.edges()) {
        e.emplace_back(u, v);
    }
    return oracle::closure_by_squaring(g.size(), e);
}

} // namespace

TEST(Validate, Examples) {
    EXPECT_TRUE(validate(single_edge()).ok);
    EXPECT_TRUE(validate(parallel_with_up()).ok);
    EXPECT_TRUE(validate(up_then_down()).ok);
    // no interior edges at all
    EXPECT_TRUE(validate({{"s", "a", "t"}, {"s", "b", "t"}, {}}).ok);
}

TEST(Validate, CrossingPair) {
    StOuterplanarGraph g{{"s", "a1", "a2", "t"}, {"s", "b1", "b2", "t"}, {up("b1", "a2"), down("a1", "b2")}};
    auto r = validate(g);
    EXPECT_FALSE(r.ok);
    ASSERT_TRUE(r.crossing.has_value());
    EXPECT_EQ(*r.crossing, (std::pair<std::size_t, std::size_t>{0, 1}));
    EXPECT_NE(r.diagnostic.find("cross"), std::string::npos);
}

TEST(Validate, Failures) {
    // b -> a makes b -> t redundant
    auto r = validate({{"s", "a", "t"}, {"s", "b", "t"}, {up("b", "a")}});
    EXPECT_FALSE(r.ok);
    EXPECT_NE(r.diagnostic.find("transitively reduced"), std::string::npos);
    // s -> t alongside a longer path
    EXPECT_FALSE(validate({{"s", "a", "t"}, {"s", "t"}, {}}).ok);
    // cycle b1 -> a1 -> a2 -> b1
    EXPECT_FALSE(validate({{"s", "a1", "a2", "t"}, {"s", "b1", "t"}, {up("b1", "a1"), down("a2", "b1")}}).ok);
    // paths sharing an interior vertex
    EXPECT_FALSE(validate({{"s", "x", "t"}, {"s", "x", "t"}, {}}).ok);
    // different endpoints
    EXPECT_FALSE(validate({{"s", "a", "t"}, {"s", "b", "u"}, {}}).ok);
    // edge within one path
    EXPECT_FALSE(validate({{"s", "a1", "a2", "t"}, {"s", "b", "t"}, {up("a1", "a2")}}).ok);
    // wrong direction tag
    EXPECT_FALSE(validate({{"s", "a1", "a2", "t"}, {"s", "b1", "b2", "t"}, {down("b1", "a2")}}).ok);
    EXPECT_THROW(st_model({{"s", "a", "t"}, {"s", "b", "t"}, {up("b", "a")}}), PreconditionError);
}

TEST(Decompose, UpwardOnly) {
    StOuterplanarGraph g = parallel_with_up();
    StModel m = st_model(g);
    auto d = decompose_regions(g);
    ASSERT_EQ(d.blocks.size(), 1u);
    const auto& b = d.blocks[0];
    EXPECT_EQ(b.red().size(), m.dag.size());
    EXPECT_TRUE(b.green.empty() && b.blue().empty() && b.yellow.empty());
    EXPECT_EQ(d.block_sequence().size(), 1u);
    EXPECT_TRUE(verify_facts(m.dag, d).ok);
}

TEST(Decompose, BarePaths) {
    StOuterplanarGraph g{{"s", "a", "t"}, {"s", "b", "c", "t"}, {}};
    StModel m = st_model(g);
    auto d = decompose_regions(g);
    ASSERT_EQ(d.blocks.size(), 1u);
    EXPECT_EQ(d.blocks[0].red().size(), m.dag.size());
    EXPECT_TRUE(d.blocks[0].green.empty());
    EXPECT_TRUE(verify_facts(m.dag, d).ok);
}

TEST(Decompose, UpThenDown) {
    StOuterplanarGraph g = up_then_down();
    StModel m = st_model(g);
    auto d = decompose_regions(g);
    ASSERT_EQ(d.blocks.size(), 1u);
    const auto& b = d.blocks[0];
    EXPECT_EQ(names(m.dag, b.red_top), (std::set<std::string>{"a1", "a2"}));
    EXPECT_EQ(names(m.dag, b.red_bottom), (std::set<std::string>{"s", "b1"}));
    EXPECT_EQ(names(m.dag, b.green), (std::set<std::string>{"b2", "b3"}));
    EXPECT_EQ(names(m.dag, b.blue_top), (std::set<std::string>{"a3", "a4"}));
    EXPECT_EQ(names(m.dag, b.blue_bottom), (std::set<std::string>{"b4", "t"}));
    EXPECT_TRUE(b.yellow.empty());
    EXPECT_EQ(d.block_sequence().size(), 2u);
    EXPECT_TRUE(verify_facts(m.dag, d).ok);
}

TEST(Decompose, SharedVertexGoesToEarlierRegion) {
    // b1 -> a2 up and a2 -> b3 down share a2; a2 stays red.
    StOuterplanarGraph g{{"s", "a1", "a2", "a3", "t"},
                         {"s", "b1", "b2", "b3", "t"},
                         {up("b1", "a2"), down("a2", "b3")}};
    ASSERT_TRUE(validate(g).ok) << validate(g).diagnostic;
    StModel m = st_model(g);
    auto d = decompose_regions(g);
    EXPECT_TRUE(names(m.dag, d.blocks[0].red_top).count("a2"));
    EXPECT_FALSE(names(m.dag, d.blocks[0].blue_top).count("a2"));
    EXPECT_TRUE(verify_facts(m.dag, d).ok);
}

TEST(VerifyFacts, MutationFails) {
    StOuterplanarGraph g = up_then_down();
    StModel m = st_model(g);
    auto d = decompose_regions(g);
    // move b2 from green into yellow: red no longer reaches all of yellow
    auto bad = d;
    auto& blk = bad.blocks[0];
    std::size_t b2 = m.dag.index_of("b2");
    blk.green.erase(std::find(blk.green.begin(), blk.green.end(), b2));
    blk.yellow.push_back(b2);
    auto r = verify_facts(m.dag, bad);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.fact, 1);
    // move a1 from red into blue
    bad = d;
    std::size_t a1 = m.dag.index_of("a1");
    auto& blk2 = bad.blocks[0];
    blk2.red_top.erase(std::find(blk2.red_top.begin(), blk2.red_top.end(), a1));
    blk2.blue_top.push_back(a1);
    r = verify_facts(m.dag, bad);
    EXPECT_FALSE(r.ok);
    EXPECT_GE(r.fact, 1);
    // a vertex listed twice
    bad = d;
    bad.blocks[0].green.push_back(a1);
    r = verify_facts(m.dag, bad);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.fact, 0);
}

TEST(VerifyFacts, EmptyColumnsVacuous) {
    auto g = single_edge();
    StModel m = st_model(g);
    auto d = decompose_regions(g);
    ASSERT_EQ(d.blocks.size(), 1u);
    EXPECT_TRUE(d.blocks[0].green.empty() && d.blocks[0].yellow.empty());
    EXPECT_TRUE(verify_facts(m.dag, d).ok);
}

TEST(RandomStOuterplanar, ValidAndSized) {
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 4 + rng.below(100);
        auto g = random_st_outerplanar(n, rng);
        auto v = validate(g);
        ASSERT_TRUE(v.ok) << v.diagnostic;
        EXPECT_EQ(st_model(g).dag.size(), n);
    }
    EXPECT_THROW(random_st_outerplanar(3, rng), PreconditionError);
    EXPECT_TRUE(validate(random_st_outerplanar(2, rng)).ok);
}

TEST(EmbedStOuterplanar, SingleEdge) {
    Drawing d = embed_st_outerplanar(single_edge());
    ASSERT_EQ(d.placement.size(), 2u);
    std::size_t s = d.graph.index_of("s"), t = d.graph.index_of("t");
    EXPECT_TRUE(dominates(d.placement[t], d.placement[s]));
    EXPECT_FALSE(dominates(d.placement[s], d.placement[t]));
}

TEST(EmbedStOuterplanar, ParallelPathsOnQPoints) {
    for (const auto& g : {parallel_with_up(), up_then_down()}) {
        std::size_t n = st_model(g).dag.size();
        int m = st_universal_side(n);
        EXPECT_EQ(m, 8 * pow2ceil(static_cast<int>(n)));
        QuadSet q = build_Q(m);
        StEmbedding e = embed_st_outerplanar(g, q);
        EXPECT_TRUE(verify_dominance_drawing(e.drawing).ok);
        std::set<std::pair<Rational, Rational>> qpts;
        for (const auto& p : q.points) {
            qpts.emplace(p.x, p.y);
        }
        for (const auto& p : e.drawing.placement) {
            EXPECT_TRUE(qpts.count({p.x, p.y}));
        }
        for (const auto& iv : e.intervals) {
            EXPECT_TRUE(in_dyadic_system(iv, 4 * pow2ceil(static_cast<int>(n))));
        }
    }
}

TEST(EmbedStOuterplanar, RejectsInvalid) {
    EXPECT_THROW(embed_st_outerplanar({{"s", "a", "t"}, {"s", "b", "t"}, {up("b", "a")}}), PreconditionError);
    EXPECT_THROW(embed_st_outerplanar(parallel_with_up(), build_Q(16)), PreconditionError);
}

TEST(EmbedStOuterplanar, RandomAgainstClosureOracle) {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = rng.chance(1, 20) ? 2 : 4 + rng.below(61);
        auto g = random_st_outerplanar(n, rng);
        auto model = st_model(g);
        auto d = decompose_regions(g);
        ASSERT_TRUE(verify_facts(model.dag, d).ok);
        Drawing dr = embed_st_outerplanar(g);
        auto reach = closure(dr.graph);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = 0; v < n; ++v) {
                if (u != v) {
                    ASSERT_EQ(dominates(dr.placement[v], dr.placement[u]), reach[u][v] == 1)
                        << "instance " << i << " pair " << dr.graph.label(u) << " " << dr.graph.label(v);
                }
            }
        }
    }
}

TEST(EmbedStOuterplanar, LargerSweep) {
    Rng rng(2024);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 4 + rng.below(253);
        auto g = random_st_outerplanar(n, rng);
        auto d = embed_st_outerplanar(g);
        EXPECT_TRUE(verify_dominance_drawing(d).ok);
    }
}

namespace {

// Every permutation of length <= k built as a sum of riffles and antiriffles,
// with the blocks stacked either up-right (direct) or down-right (skew).
std::set<std::vector<int>> sums_of_riffles(std::size_t k, bool down_right) {
    std::vector<std::set<std::vector<int>>> base(k + 1), all(k + 1);
    for (std::size_t len = 1; len <= k; ++len) {
        std::vector<int> v(len);
        for (std::size_t i = 0; i < len; ++i) {
            v[i] = static_cast<int>(i + 1);
        }
        do {
            Permutation p(v);
            auto avoids_basis = [](const Permutation& q) {
                for (const auto& b : oracle::riffle_basis()) {
                    if (oracle::brute_force_contains(q, b)) {
                        return false;
                    }
                }
                return true;
            };
            if (avoids_basis(p) || avoids_basis(inverse(p))) {
                base[len].insert(v);
            }
        } while (std::next_permutation(v.begin(), v.end()));
    }
    std::set<std::vector<int>> out;
    for (std::size_t len = 1; len <= k; ++len) {
        all[len] = base[len];
        for (std::size_t a = 1; a < len; ++a) {
            for (const auto& x : all[a]) {
                for (const auto& y : base[len - a]) {
                    std::vector<int> v;
                    int shift_x = down_right ? static_cast<int>(len - a) : 0;
                    int shift_y = down_right ? 0 : static_cast<int>(a);
                    for (int z : x) {
                        v.push_back(z + shift_x);
                    }
                    for (int z : y) {
                        v.push_back(z + shift_y);
                    }
                    all[len].insert(v);
                }
            }
        }
        out.insert(all[len].begin(), all[len].end());
    }
    return out;
}

} // namespace

TEST(SkewRiffles, EmbedInBlackPoints) {
    PointSet s = shear(skew_riffle_superpattern(8));
    Permutation text = points_to_permutation(s);
    for (bool down_right : {false, true}) {
        auto perms = sums_of_riffles(5, down_right);
        EXPECT_GT(perms.size(), 50u);
        for (const auto& v : perms) {
            Permutation p(v);
            auto e = contains_pattern(text, p);
            ASSERT_TRUE(e.has_value()) << format_permutation(p) << (down_right ? " (down-right)" : " (up-right)");
            EXPECT_TRUE(is_valid_embedding(text, p, *e));
        }
    }
}

TEST(SkewRiffles, ThreeTwoOne) {
    Permutation p({3, 2, 1});
    EXPECT_TRUE(sums_of_riffles(3, true).count({3, 2, 1}));
    EXPECT_FALSE(sums_of_riffles(3, false).count({3, 2, 1}));
    Permutation text = points_to_permutation(shear(skew_riffle_superpattern(8)));
    EXPECT_TRUE(contains_pattern(text, p).has_value());
    EXPECT_TRUE(oracle::brute_force_contains(text, p));
}
