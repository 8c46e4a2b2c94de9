#pragma once

#include <cstddef>
#include <vector>

#include "superpat/perm/point_set.hpp"
#include "superpat/poset/drawing.hpp"

namespace superpat {

/// The root of a directed tree (edges point away from it). Throws if g is not
/// one.
inline std::size_t tree_root(const Dag& g) {
    if (g.size() == 0) {
        throw PreconditionError("not a tree: no vertices");
    }
    std::size_t root = g.size();
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.in(v).empty()) {
            if (root != g.size()) {
                throw PreconditionError("not a tree: several roots");
            }
            root = v;
        } else if (g.in(v).size() > 1) {
            throw PreconditionError("not a tree: vertex '" + g.label(v) + "' has several parents");
        }
    }
    if (root == g.size()) {
        throw PreconditionError("not a tree: no root");
    }
    // One root, one parent elsewhere, no cycle: connected.
    return root;
}

namespace detail {

inline std::vector<std::size_t> preorder_ranks(const Dag& g, std::size_t root, bool left_to_right) {
    std::vector<std::size_t> rank(g.size());
    std::vector<std::size_t> stack{root};
    std::size_t next = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        rank[v] = next++;
        const auto& kids = g.out(v);
        if (left_to_right) {
            stack.insert(stack.end(), kids.rbegin(), kids.rend());
        } else {
            stack.insert(stack.end(), kids.begin(), kids.end());
        }
    }
    return rank;
}

} // namespace detail

/// x = rank in left-to-right preorder, y = rank in right-to-left preorder,
/// children in edge input order.
inline Drawing tree_drawing(const Dag& t) {
    std::size_t root = tree_root(t);
    auto xr = detail::preorder_ranks(t, root, true);
    auto yr = detail::preorder_ranks(t, root, false);
    Drawing d{t, {}};
    for (std::size_t v = 0; v < t.size(); ++v) {
        d.placement.push_back({Rational(static_cast<std::int64_t>(xr[v])), Rational(static_cast<std::int64_t>(yr[v])),
                               std::nullopt, t.label(v)});
    }
    return d;
}

/// Plot of a new global minimum followed by sp213 shifted up by one.
inline PointSet tree_universal_pointset(std::size_t n, const Permutation& sp213) {
    if (n == 0) {
        throw PreconditionError("tree_universal_pointset: n must be positive");
    }
    std::vector<int> v{1};
    for (int x : sp213) {
        v.push_back(x + 1);
    }
    return plot(Permutation(std::move(v)));
}

} // namespace superpat
