#include <gtest/gtest.h>

#include <regex>
#include <stack>

#include "superpat/cli/commands.hpp"
#include "superpat/cli/suite.hpp"
#include "superpat/cli/svg.hpp"
#include "test_oracles.hpp"

using namespace superpat;

namespace {

// Minimal XML well-formedness: one root, balanced tags, quoted attributes,
// no raw '<' or '&' in text.
bool well_formed(const std::string& doc) {
    std::stack<std::string> open;
    std::size_t i = 0, roots = 0;
    if (doc.rfind("<?xml", 0) == 0) {
        i = doc.find("?>");
        if (i == std::string::npos) {
            return false;
        }
        i += 2;
    }
    static const std::regex attr_list(R"((\s+[A-Za-z_:][-A-Za-z0-9_:.]*="[^"<]*")*\s*)");
    while (i < doc.size()) {
        if (doc[i] != '<') {
            if (doc[i] == '&') {
                auto semi = doc.find(';', i);
                if (semi == std::string::npos || semi - i > 6) {
                    return false;
                }
            }
            if (open.empty() && !std::isspace(static_cast<unsigned char>(doc[i]))) {
                return false;
            }
            ++i;
            continue;
        }
        auto close = doc.find('>', i);
        if (close == std::string::npos) {
            return false;
        }
        std::string tag = doc.substr(i + 1, close - i - 1);
        i = close + 1;
        if (!tag.empty() && tag[0] == '/') {
            if (open.empty() || open.top() != tag.substr(1)) {
                return false;
            }
            open.pop();
            continue;
        }
        bool self_closing = !tag.empty() && tag.back() == '/';
        if (self_closing) {
            tag.pop_back();
        }
        auto sp = tag.find_first_of(" \t\n");
        std::string name = tag.substr(0, sp);
        std::string attrs = sp == std::string::npos ? "" : tag.substr(sp);
        if (name.empty() || !std::regex_match(attrs, attr_list)) {
            return false;
        }
        if (open.empty()) {
            ++roots;
        }
        if (!self_closing) {
            open.push(name);
        }
    }
    return open.empty() && roots == 1;
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t c = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) {
        ++c;
    }
    return c;
}

std::vector<double> attr_values(const std::string& svg, const std::string& attr) {
    std::vector<double> out;
    std::regex re(" " + attr + "=\"([-0-9.]+)\"");
    for (std::sregex_iterator it(svg.begin(), svg.end(), re), end; it != end; ++it) {
        out.push_back(std::stod((*it)[1]));
    }
    return out;
}

} // namespace

TEST(WellFormed, OracleSanity) {
    EXPECT_TRUE(well_formed("<a><b x=\"1\"/></a>"));
    EXPECT_FALSE(well_formed("<a><b></a>"));
    EXPECT_FALSE(well_formed("<a x=1></a>"));
    EXPECT_FALSE(well_formed("<a></a><b></b>"));
    EXPECT_FALSE(well_formed("<a>x < y</a>"));
}

TEST(RenderSvg, EmptyPointSet) {
    std::string svg = render_svg(PointSet{});
    EXPECT_TRUE(well_formed(svg));
    EXPECT_EQ(count(svg, "<circle"), 0u);
    EXPECT_NE(svg.find("viewBox"), std::string::npos);
}

TEST(RenderSvg, PlotScaling) {
    SvgOptions opt;
    opt.unit = 10;
    opt.margin = 5;
    std::string svg = render_svg(plot(Permutation({4, 1, 5, 2, 6, 3})), opt);
    EXPECT_TRUE(well_formed(svg));
    EXPECT_EQ(count(svg, "<circle"), 6u);
    // 6x6 frame: coordinates 1..6 span 50 units plus margins
    EXPECT_NE(svg.find("width=\"60\" height=\"60\" viewBox=\"0 0 60 60\""), std::string::npos);
    auto cx = attr_values(svg, "cx"), cy = attr_values(svg, "cy");
    ASSERT_EQ(cx.size(), 6u);
    const int p[] = {4, 1, 5, 2, 6, 3};
    for (int i = 0; i < 6; ++i) {
        EXPECT_DOUBLE_EQ(cx[static_cast<std::size_t>(i)], 5 + 10.0 * i);
        EXPECT_DOUBLE_EQ(cy[static_cast<std::size_t>(i)], 5 + 10.0 * (6 - p[i]));
    }
}

TEST(RenderSvg, DiamondDrawing) {
    Dag diamond({"s", "a", "b", "t"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    Drawing d = width2_drawing(diamond);
    std::string svg = render_svg(d);
    EXPECT_TRUE(well_formed(svg));
    EXPECT_EQ(count(svg, "<circle"), 4u);
    EXPECT_EQ(count(svg, "<line"), 4u);
    auto x1 = attr_values(svg, "x1"), y1 = attr_values(svg, "y1"), x2 = attr_values(svg, "x2"),
         y2 = attr_values(svg, "y2");
    ASSERT_EQ(x1.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        // up-right on screen: x grows, y shrinks
        EXPECT_GE(x2[i], x1[i]);
        EXPECT_LE(y2[i], y1[i]);
    }
}

TEST(RenderSvg, LabelsEscapedAndBoards) {
    PointSet ps{{Rational(1), Rational(1), Tag::red, std::string("a<b&\"c\"")}};
    SvgOptions opt;
    opt.labels = true;
    std::string svg = render_svg(ps, opt);
    EXPECT_TRUE(well_formed(svg));
    EXPECT_NE(svg.find("a&lt;b&amp;&quot;c&quot;"), std::string::npos);
    std::string b = render_svg(board(Permutation({1, 4, 8, 7, 3, 5, 2, 6})));
    EXPECT_TRUE(well_formed(b));
    EXPECT_EQ(count(b, "<rect"), 20u);
    EXPECT_TRUE(well_formed(render_svg(embed_st_outerplanar(random_st_outerplanar(30, *std::make_unique<Rng>(5))))));
}

TEST(RandomInstance, Deterministic) {
    EXPECT_EQ(random_instance("perm321", 6, 42), random_instance("perm321", 6, 42));
    for (const auto& k : instance_kinds()) {
        EXPECT_EQ(random_instance(k, 20, 9), random_instance(k, 20, 9)) << k;
    }
    EXPECT_NE(random_instance("perm321", 30, 1), random_instance("perm321", 30, 2));
}

TEST(RandomInstance, ClassMembership) {
    Permutation r = parse_permutation(random_instance("riffle", 8, 7));
    EXPECT_EQ(r.size(), 8u);
    for (const auto& b : oracle::riffle_basis()) {
        EXPECT_FALSE(oracle::brute_force_contains(r, b));
    }
    Permutation p = parse_permutation(random_instance("perm321", 6, 42));
    EXPECT_TRUE(oracle::avoids_321(p));
    Dag w = parse_dag(random_instance("width2", 30, 1));
    EXPECT_EQ(w.size(), 30u);
    EXPECT_NO_THROW(width2_chains(w));
    EXPECT_NO_THROW(tree_root(parse_dag(random_instance("tree", 15, 3))));
    EXPECT_TRUE(validate(parse_st_outerplanar(random_instance("stouter", 15, 3))).ok);
}

TEST(RandomInstance, Rejects) {
    EXPECT_THROW(random_instance("cactus", 5, 1), PreconditionError);
    EXPECT_THROW(random_instance("perm321", 0, 1), PreconditionError);
    EXPECT_THROW(random_instance("stouter", 3, 1), PreconditionError);
}

TEST(Families, SuperpatternsAndEmbedding) {
    EXPECT_EQ(make_superpattern("riffle", 3).size(), 5u);
    EXPECT_EQ(make_superpattern("generic", 3).size(), 9u);
    EXPECT_THROW(make_superpattern("nope", 3), PreconditionError);
    Permutation p({2, 3, 1, 5, 4});
    for (const char* f : {"mu", "reduced-mu", "generic"}) {
        EXPECT_TRUE(is_valid_embedding(make_superpattern(f, 5), p, embed_into_family(f, p, 5))) << f;
    }
    Permutation q({3, 1, 2});
    EXPECT_TRUE(is_valid_embedding(make_superpattern("riffle", 3), Permutation({2, 3, 1}),
                                   embed_into_family("riffle", Permutation({2, 3, 1}), 3)));
    EXPECT_TRUE(is_valid_embedding(make_superpattern("antiriffle", 3), q, embed_into_family("antiriffle", q, 3)));
    EXPECT_EQ(make_pointset("quadset", 8).at("points").size(), build_Q(8).points.size());
    EXPECT_EQ(make_pointset("combined-square", 4).size(), 12u);
}

TEST(Suites, RiffleReportsAllRiffles) {
    SuiteReport r = run_suite("riffle");
    EXPECT_TRUE(r.ok);
    bool found = false;
    for (const auto& c : r.checks) {
        if (c.at("check") == "embed n=12") {
            EXPECT_EQ(c.at("checked"), 4084u);
            found = true;
        }
    }
    EXPECT_TRUE(found);
    std::string lines = r.jsonl();
    EXPECT_EQ(count(lines, "\n"), r.checks.size() + 1);
    EXPECT_NE(lines.find("\"summary\":true"), std::string::npos);
}

TEST(Suites, CountsAndRoundtrip) {
    for (const char* name : {"counts", "roundtrip"}) {
        SuiteReport r = run_suite(name, 5);
        EXPECT_TRUE(r.ok) << r.jsonl();
        EXPECT_EQ(r.summary().at("failed"), 0u);
    }
    EXPECT_THROW(run_suite("bogus"), PreconditionError);
    EXPECT_EQ(detail::catalan(7), 429u);
}

TEST(Suites, Deterministic) { EXPECT_EQ(run_suite("roundtrip", 3).jsonl(), run_suite("roundtrip", 3).jsonl()); }

TEST(AllRiffles, MatchesOracle) {
    for (std::size_t n = 1; n <= 8; ++n) {
        auto mine = all_riffles(n);
        auto theirs = oracle::all_riffles(n);
        EXPECT_EQ(mine.size(), theirs.size());
    }
    EXPECT_EQ(all_small_trees(4).size(), 6u);
}
