#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "superpat/cli/io.hpp"
#include "superpat/cli/random.hpp"
#include "superpat/outerplanar/embed.hpp"
#include "superpat/perm/board.hpp"
#include "superpat/perm/pattern.hpp"
#include "superpat/poset/embed.hpp"
#include "superpat/poset/tree.hpp"
#include "superpat/poset/width2.hpp"
#include "superpat/superpattern/mu.hpp"
#include "superpat/superpattern/riffle.hpp"

namespace superpat {

/// One JSON object per check, then a summary object.
struct SuiteReport {
    std::string suite;
    std::vector<Json> checks;
    bool ok = true;

    void add(std::string name, bool passed, std::uint64_t checked, Json extra = Json::object()) {
        Json o;
        o["suite"] = suite;
        o["check"] = std::move(name);
        o["ok"] = passed;
        o["checked"] = checked;
        for (auto& [k, v] : extra.items()) {
            o[k] = v;
        }
        checks.push_back(std::move(o));
        ok = ok && passed;
    }

    Json summary() const {
        std::size_t failed = 0;
        for (const auto& c : checks) {
            failed += c.at("ok").get<bool>() ? 0 : 1;
        }
        return {{"suite", suite}, {"summary", true}, {"ok", ok}, {"checks", checks.size()}, {"failed", failed}};
    }

    std::string jsonl() const {
        std::string out;
        for (const auto& c : checks) {
            out += c.dump() + "\n";
        }
        return out + summary().dump() + "\n";
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"riffle", "mu", "quadset", "width2", "trees", "roundtrip", "counts"};
    return names;
}

/// Every riffle of length n, built from its lower set of positions.
inline std::vector<Permutation> all_riffles(std::size_t n) {
    std::set<std::vector<int>> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        int lower = 0;
        for (std::size_t i = 0; i < n; ++i) {
            lower += (mask >> i) & 1 ? 1 : 0;
        }
        std::vector<int> v(n);
        int lo = 1, hi = lower + 1;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = (mask >> i) & 1 ? lo++ : hi++;
        }
        seen.insert(std::move(v));
    }
    std::vector<Permutation> out;
    for (const auto& v : seen) {
        out.emplace_back(v);
    }
    return out;
}

/// Rooted trees on n labelled vertices where vertex i > 0 has a parent < i.
inline std::vector<Dag> all_small_trees(std::size_t n) {
    std::vector<Dag> out;
    if (n == 0) {
        return out;
    }
    std::vector<std::size_t> parent(n, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            std::vector<Edge> e;
            for (std::size_t v = 1; v < n; ++v) {
                e.emplace_back(parent[v], v);
            }
            out.push_back(Dag::unlabelled(n, e));
            return;
        }
        for (std::size_t p = 0; p < i; ++p) {
            parent[i] = p;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return out;
}

namespace detail {

inline const std::vector<Permutation>& riffle_basis() {
    static const std::vector<Permutation> b{Permutation({3, 2, 1}), Permutation({2, 1, 4, 3}),
                                            Permutation({2, 4, 1, 3})};
    return b;
}

inline void suite_riffle(SuiteReport& r) {
    for (std::size_t n = 1; n <= 12; ++n) {
        Permutation sp = riffle_superpattern(n);
        r.add("size n=" + std::to_string(n), sp.size() == 2 * n - 1, 1, {{"size", sp.size()}});
        auto riffles = all_riffles(n);
        std::uint64_t good = 0;
        Json extra{{"expected", (std::uint64_t{1} << n) - n}};
        for (const auto& p : riffles) {
            if (is_valid_embedding(sp, p, embed_riffle(p, n))) {
                ++good;
            } else if (!extra.contains("counterexample")) {
                extra["counterexample"] = format_permutation(p);
            }
        }
        r.add("embed n=" + std::to_string(n), good == riffles.size() && riffles.size() == (1u << n) - n,
              riffles.size(), extra);
    }
}

inline void suite_mu(SuiteReport& r) {
    for (std::size_t n : {4, 16, 64, 256, 1024}) {
        auto len = static_cast<std::int64_t>(mu(n).size());
        r.add("length n=" + std::to_string(n), len == mu_series(n) && len == mu_count(n), 1,
              {{"length", len}, {"series", mu_series(n)}});
    }
    const std::size_t n = std::size_t{1} << 16;
    const double n32 = std::pow(static_cast<double>(n), 1.5);
    double full = static_cast<double>(mu_count(n)) / n32, red = static_cast<double>(mu_count(n, true)) / n32;
    r.add("ratio n=65536", full >= 28 && full <= 32, 1, {{"ratio", full}});
    r.add("reduced ratio n=65536", red >= 20 && red <= 24, 1, {{"ratio", red}});
}

inline void suite_quadset(SuiteReport& r) {
    for (int j = 1; j <= 12; ++j) {
        const std::uint64_t m = std::uint64_t{1} << j, k = static_cast<std::uint64_t>(j);
        QuadSet q = build_Q(static_cast<int>(m));
        bool ok = q.points.size() <= 4 * m * k + 4 * m && q.black <= 4 * m + 2 * m * k &&
                  q.green + q.yellow <= 2 * m * k;
        r.add("size m=" + std::to_string(m), ok, 1,
              {{"points", q.points.size()}, {"black", q.black}, {"colored", q.green + q.yellow}});
    }
    for (int m : {8, 16, 32, 64}) {
        QuadSet q = build_Q(m);
        std::uint64_t checked = 0;
        bool ok = true;
        for (const auto& s1 : q.squares) {
            if (s1.iv.hi < m && (s1.green.size() != static_cast<std::size_t>(s1.side()) ||
                                 s1.yellow.size() != static_cast<std::size_t>(s1.side()))) {
                ok = false;
            }
            for (const auto& s2 : q.squares) {
                if (s2.iv.lo != s1.iv.hi + 1) {
                    continue;
                }
                ++checked;
                for (auto g : s1.green) {
                    for (auto y : s2.yellow) {
                        ok = ok && !dominates(q.points[g], q.points[y]) && !dominates(q.points[y], q.points[g]);
                    }
                    for (auto p : s2.right) {
                        ok = ok && dominates(q.points[p], q.points[g]);
                    }
                }
                for (auto y : s1.yellow) {
                    for (auto p : s2.top) {
                        ok = ok && dominates(q.points[p], q.points[y]);
                    }
                }
            }
        }
        r.add("columns and independence m=" + std::to_string(m), ok, checked);
    }
}

inline void suite_width2(SuiteReport& r, std::uint64_t seed) {
    Rng rng(seed);
    std::uint64_t good = 0;
    Json extra = Json::object();
    const int count = 500;
    for (int t = 0; t < count; ++t) {
        std::size_t n = 1 + rng.below(100);
        Dag g = random_width2_dag(n, rng);
        Drawing d = width2_drawing(g);
        bool ok = verify_dominance_drawing(d).ok && avoids(drawing_to_permutation(d).perm, Permutation({3, 2, 1}));
        ok = ok && verify_dominance_drawing(embed_drawing_mu(d, n)).ok;
        if (ok) {
            ++good;
        } else if (!extra.contains("counterexample")) {
            extra["counterexample"] = to_json(g);
        }
    }
    r.add("random width-2 posets", good == count, count, extra);
}

inline void suite_trees(SuiteReport& r, std::uint64_t seed) {
    Rng rng(seed);
    std::uint64_t good = 0;
    const int count = 500;
    Json extra = Json::object();
    for (int t = 0; t < count; ++t) {
        std::size_t n = 1 + rng.below(200);
        Dag tree = random_tree(n, rng);
        Drawing d = tree_drawing(tree);
        auto reach = reachability(tree);
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u) {
            for (std::size_t v = 0; v < n && ok; ++v) {
                ok = u == v || dominates(d.placement[v], d.placement[u]) == reach[u].test(v);
            }
        }
        ok = ok && avoids(drawing_to_permutation(d).perm, Permutation({2, 1, 3}));
        if (ok) {
            ++good;
        } else if (!extra.contains("counterexample")) {
            extra["counterexample"] = to_json(tree);
        }
    }
    r.add("random trees", good == count, count, extra);
    for (std::size_t n = 1; n <= 5; ++n) {
        PointSet u = tree_universal_pointset(n, n == 1 ? Permutation() : generic_superpattern(n - 1));
        auto trees = all_small_trees(n);
        std::uint64_t fine = 0;
        for (const auto& t : trees) {
            fine += verify_dominance_drawing(embed_drawing(tree_drawing(t), u)).ok ? 1 : 0;
        }
        r.add("universal n=" + std::to_string(n), fine == trees.size(), trees.size(), {{"points", u.size()}});
    }
}

inline void suite_roundtrip(SuiteReport& r, std::uint64_t seed) {
    std::uint64_t checked = 0;
    bool ok = true;
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = static_cast<int>(i + 1);
        }
        do {
            Permutation p(v);
            ok = ok && board_to_permutation(board(p)) == p && parse_board(format_board(board(p))) == board(p);
            ++checked;
        } while (std::next_permutation(v.begin(), v.end()));
    }
    r.add("board exhaustive n<=6", ok, checked);
    Rng rng(seed);
    ok = true;
    for (int t = 0; t < 10000; ++t) {
        Permutation p = random_permutation(1 + rng.below(64), rng);
        ok = ok && board_to_permutation(board(p)) == p && parse_permutation(format_permutation(p)) == p;
    }
    r.add("board random n<=64", ok, 10000);
    ok = true;
    for (int t = 0; t < 100; ++t) {
        Drawing d = width2_drawing(random_width2_dag(1 + rng.below(30), rng));
        Drawing back = parse_drawing(to_json(d).dump());
        ok = ok && back.graph.labels() == d.graph.labels() && back.graph.edges() == d.graph.edges();
        for (std::size_t v = 0; v < d.placement.size() && ok; ++v) {
            ok = back.placement[v].x == d.placement[v].x && back.placement[v].y == d.placement[v].y;
        }
        std::size_t n = 4 + rng.below(40);
        auto g = random_st_outerplanar(n, rng);
        ok = ok && to_json(parse_st_outerplanar(to_json(g).dump())) == to_json(g);
    }
    r.add("json drawings and graphs", ok, 100);
}

inline std::uint64_t catalan(std::size_t n) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < n; ++i) {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    return c;
}

inline void suite_counts(SuiteReport& r) {
    for (std::size_t n = 1; n <= 10; ++n) {
        auto c = enumerate_avoiders(n, {Permutation({3, 2, 1})}).size();
        r.add("catalan n=" + std::to_string(n), c == catalan(n), 1, {{"count", c}, {"expected", catalan(n)}});
        auto rf = enumerate_avoiders(n, riffle_basis()).size();
        std::uint64_t want = (std::uint64_t{1} << n) - n;
        r.add("riffles n=" + std::to_string(n), rf == want, 1, {{"count", rf}, {"expected", want}});
    }
}

} // namespace detail

inline SuiteReport run_suite(const std::string& name, std::uint64_t seed = 1) {
    SuiteReport r;
    r.suite = name;
    if (name == "riffle") {
        detail::suite_riffle(r);
    } else if (name == "mu") {
        detail::suite_mu(r);
    } else if (name == "quadset") {
        detail::suite_quadset(r);
    } else if (name == "width2") {
        detail::suite_width2(r, seed);
    } else if (name == "trees") {
        detail::suite_trees(r, seed);
    } else if (name == "roundtrip") {
        detail::suite_roundtrip(r, seed);
    } else if (name == "counts") {
        detail::suite_counts(r);
    } else {
        throw PreconditionError("unknown suite '" + name + "'");
    }
    return r;
}

} // namespace superpat
