#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superpat/error.hpp"
#include "superpat/perm/permutation.hpp"
#include "superpat/perm/rational.hpp"

namespace superpat {

enum class Tag { black, red, blue, green, yellow };

inline std::string_view tag_name(Tag t) {
    switch (t) {
    case Tag::black: return "black";
    case Tag::red: return "red";
    case Tag::blue: return "blue";
    case Tag::green: return "green";
    case Tag::yellow: return "yellow";
    }
    return "black";
}

inline Tag parse_tag(std::string_view s) {
    for (Tag t : {Tag::black, Tag::red, Tag::blue, Tag::green, Tag::yellow}) {
        if (tag_name(t) == s) {
            return t;
        }
    }
    throw ParseError("unknown tag '" + std::string(s) + "'");
}

struct Point {
    Rational x;
    Rational y;
    std::optional<Tag> tag;
    std::optional<std::string> label;
};

/// Weak dominance: both coordinates of b are >= those of a.
inline bool dominates(const Point& b, const Point& a) { return a.x <= b.x && a.y <= b.y; }

using PointSet = std::vector<Point>;

/// {(i, p_i)}, with i 1-based.
inline PointSet plot(const Permutation& p) {
    PointSet out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out.push_back({Rational(static_cast<std::int64_t>(i + 1)), Rational(p[i]), std::nullopt, std::nullopt});
    }
    return out;
}

namespace detail {

inline std::vector<std::size_t> lex_ranks(const PointSet& ps, bool x_major) {
    std::vector<std::size_t> order(ps.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Point& p = ps[a];
        const Point& q = ps[b];
        if (x_major) {
            return p.x != q.x ? p.x < q.x : p.y < q.y;
        }
        return p.y != q.y ? p.y < q.y : p.x < q.x;
    });
    std::vector<std::size_t> rank(ps.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        rank[order[r]] = r;
    }
    return rank;
}

} // namespace detail

/// Removes coordinate ties while keeping the dominance structure: weak
/// dominance becomes strict, incomparable pairs stay incomparable. This is
/// the shear (x, y) -> (xN + y, yN + x) in the limit of large N, realised
/// exactly as ranks: new x = rank of (x, y) lexicographically, new y = rank of
/// (y, x). Output coordinates are 1..n. Tags and labels are kept.
inline PointSet shear(const PointSet& ps) {
    auto xr = detail::lex_ranks(ps, true);
    auto yr = detail::lex_ranks(ps, false);
    PointSet out = ps;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        out[i].x = Rational(static_cast<std::int64_t>(xr[i] + 1));
        out[i].y = Rational(static_cast<std::int64_t>(yr[i] + 1));
    }
    // Identical points are the only way two ranks can disagree with the
    // strict order: detect them after sorting.
    std::vector<std::size_t> order(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        order[xr[i]] = i;
    }
    for (std::size_t r = 1; r < order.size(); ++r) {
        const Point& a = ps[order[r - 1]];
        const Point& b = ps[order[r]];
        if (a.x == b.x && a.y == b.y) {
            throw PreconditionError("shear: two identical points at (" + to_string(a.x) + ", " +
                                    to_string(a.y) + ")");
        }
    }
    return out;
}

/// Point order by x, as indices into ps. Requires distinct x.
inline std::vector<std::size_t> x_order(const PointSet& ps) {
    std::vector<std::size_t> order(ps.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ps[a].x < ps[b].x; });
    return order;
}

/// Replaces coordinates by their ranks: the permutation mapping x-rank to
/// y-rank. All x and all y must be distinct (shear first otherwise).
inline Permutation points_to_permutation(const PointSet& ps) {
    auto order = x_order(ps);
    std::vector<std::size_t> by_y(ps.size());
    for (std::size_t i = 0; i < by_y.size(); ++i) {
        by_y[i] = i;
    }
    std::sort(by_y.begin(), by_y.end(), [&](std::size_t a, std::size_t b) { return ps[a].y < ps[b].y; });
    for (std::size_t r = 1; r < ps.size(); ++r) {
        if (ps[order[r]].x == ps[order[r - 1]].x || ps[by_y[r]].y == ps[by_y[r - 1]].y) {
            throw PreconditionError("points_to_permutation: tied coordinates; apply shear first");
        }
    }
    std::vector<int> yrank(ps.size());
    for (std::size_t r = 0; r < by_y.size(); ++r) {
        yrank[by_y[r]] = static_cast<int>(r + 1);
    }
    std::vector<int> v(ps.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        v[r] = yrank[order[r]];
    }
    return Permutation(std::move(v));
}

} // namespace superpat
