#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superpat/perm/point_set.hpp"
#include "superpat/poset/dag.hpp"

namespace superpat {

/// A graph with one point per vertex (placement[v] is vertex v's point).
struct Drawing {
    Dag graph;
    std::vector<Point> placement;
};

struct DominanceCheck {
    bool ok = true;
    /// Offending ordered pair (u, v); for a shared point both are set.
    std::optional<Edge> witness;
    std::string reason;
};

/// Checks that the placement is injective and that, for every ordered pair
/// u != v, v is reachable from u exactly when v weakly dominates u.
inline DominanceCheck verify_dominance_drawing(const Drawing& d) {
    DominanceCheck r;
    const std::size_t n = d.graph.size();
    if (d.placement.size() != n) {
        r.ok = false;
        r.reason = "placement size differs from vertex count";
        return r;
    }
    auto reach = reachability(d.graph);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) {
                continue;
            }
            const Point& a = d.placement[u];
            const Point& b = d.placement[v];
            if (a.x == b.x && a.y == b.y) {
                r.ok = false;
                r.witness = Edge{u, v};
                r.reason = "two vertices share a point";
                return r;
            }
            bool dom = dominates(b, a);
            bool path = reach[u].test(v);
            if (dom != path) {
                r.ok = false;
                r.witness = Edge{u, v};
                r.reason = path ? "path without dominance" : "dominance without path";
                return r;
            }
        }
    }
    return r;
}

struct DrawingPermutation {
    Permutation perm;
    /// vertex_at[i] is the vertex drawn at position i (0-based) of perm.
    std::vector<std::size_t> vertex_at;
};

/// Shear then read off the permutation; rejects drawings that fail the
/// dominance check.
inline DrawingPermutation drawing_to_permutation(const Drawing& d) {
    auto check = verify_dominance_drawing(d);
    if (!check.ok) {
        throw PreconditionError("drawing_to_permutation: not a dominance drawing (" + check.reason + ")");
    }
    PointSet sheared = shear(d.placement);
    return {points_to_permutation(sheared), x_order(sheared)};
}

} // namespace superpat
