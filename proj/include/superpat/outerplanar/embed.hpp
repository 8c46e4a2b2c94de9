#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "superpat/outerplanar/decompose.hpp"
#include "superpat/outerplanar/intervals.hpp"
#include "superpat/outerplanar/quadset.hpp"
#include "superpat/poset/drawing.hpp"

namespace superpat {

/// Q_m built once per m and shared.
inline std::shared_ptr<const QuadSet> cached_Q(int m) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const QuadSet>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[m];
    if (!slot) {
        slot = std::make_shared<const QuadSet>(build_Q(m));
    }
    return slot;
}

/// Side of the point set used for an n-vertex graph: 8 * pow2ceil(n).
inline int st_universal_side(std::size_t n) { return 8 * pow2ceil(static_cast<int>(std::max<std::size_t>(n, 2))); }

struct StEmbedding {
    Drawing drawing;
    std::vector<Interval> intervals; // one per block X_1, X_2, ...
    std::vector<std::size_t> point_index; // per vertex, into q.points
};

namespace detail {

/// The red part in riffle order: each top vertex comes right after the
/// bottom vertices that reach it. Swapping the roles gives the blue order.
inline std::vector<std::size_t> merge_order(const std::vector<std::size_t>& first_row,
                                            const std::vector<std::size_t>& second_row,
                                            const std::vector<Bits>& reach) {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (auto v : second_row) {
        while (k < first_row.size() && reach[first_row[k]].test(v)) {
            out.push_back(first_row[k++]);
        }
        out.push_back(v);
    }
    out.insert(out.end(), first_row.begin() + static_cast<std::ptrdiff_t>(k), first_row.end());
    return out;
}

} // namespace detail

/// Draws g on q (q.m must be at least 8 * pow2ceil(n)). Throws
/// PreconditionError for invalid input and InternalError naming the stage
/// that went wrong otherwise.
inline StEmbedding embed_st_outerplanar(const StOuterplanarGraph& g, const QuadSet& q) {
    auto v = validate(g);
    if (!v.ok) {
        throw PreconditionError("embed_st_outerplanar [validate]: " + v.diagnostic);
    }
    StModel model = detail::build_model(g);
    const Dag& dag = model.dag;
    RegionDecomposition d = decompose_regions(model, st_rows(model));
    if (auto fc = verify_facts(dag, d); !fc.ok) {
        throw InternalError("embed_st_outerplanar [decompose]: fact " + std::to_string(fc.fact) + " fails in block " +
                            std::to_string(fc.block + 1) + ": " + fc.detail);
    }
    const int n = static_cast<int>(pow2ceil(static_cast<int>(std::max<std::size_t>(dag.size(), 2))));
    if (q.m < 8 * n) {
        throw PreconditionError("embed_st_outerplanar: point set Q_" + std::to_string(q.m) + " is too small");
    }
    auto blocks = d.block_sequence();
    std::vector<int> sizes;
    for (const auto& x : blocks) {
        sizes.push_back(static_cast<int>(x.size()));
    }
    StEmbedding out;
    try {
        out.intervals = interval_allocate(sizes, n);
    } catch (const Error& e) {
        throw InternalError(std::string("embed_st_outerplanar [allocate]: ") + e.what());
    }
    auto reach = reachability(dag);
    out.point_index.assign(dag.size(), q.points.size());
    auto put = [&](const std::vector<std::size_t>& vs, const std::vector<std::size_t>& slots, const char* what) {
        if (vs.size() > slots.size()) {
            throw InternalError(std::string("embed_st_outerplanar [place]: ") + what + " part larger than its square");
        }
        for (std::size_t i = 0; i < vs.size(); ++i) {
            out.point_index[vs[i]] = slots[i];
        }
    };
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const RegionBlock& b = d.blocks[i / 2];
        const QuadSquare& sq = q.square(out.intervals[i]);
        if (i % 2 == 0) {
            // red on the horizontal sides, one column per vertex
            auto order = detail::merge_order(b.red_bottom, b.red_top, reach);
            std::vector<std::size_t> slots;
            for (std::size_t t = 0; t < order.size() && t < sq.bottom.size(); ++t) {
                bool is_top = std::find(b.red_top.begin(), b.red_top.end(), order[t]) != b.red_top.end();
                slots.push_back(is_top ? sq.top[t] : sq.bottom[t]);
            }
            put(order, slots, "red");
            put(b.green, sq.green, "green");
        } else {
            auto order = detail::merge_order(b.blue_top, b.blue_bottom, reach);
            std::vector<std::size_t> slots;
            for (std::size_t t = 0; t < order.size() && t < sq.left.size(); ++t) {
                bool is_bottom =
                    std::find(b.blue_bottom.begin(), b.blue_bottom.end(), order[t]) != b.blue_bottom.end();
                slots.push_back(is_bottom ? sq.right[t] : sq.left[t]);
            }
            put(order, slots, "blue");
            put(b.yellow, sq.yellow, "yellow");
        }
    }
    out.drawing.graph = dag;
    for (std::size_t u = 0; u < dag.size(); ++u) {
        if (out.point_index[u] >= q.points.size()) {
            throw InternalError("embed_st_outerplanar [place]: vertex '" + dag.label(u) + "' was not placed");
        }
        Point p = q.points[out.point_index[u]];
        p.label = dag.label(u);
        out.drawing.placement.push_back(p);
    }
    if (auto check = verify_dominance_drawing(out.drawing); !check.ok) {
        std::string where;
        if (check.witness) {
            where = " ('" + dag.label(check.witness->first) + "', '" + dag.label(check.witness->second) + "')";
        }
        throw InternalError("embed_st_outerplanar [verify]: " + check.reason + where);
    }
    return out;
}

/// Dominance drawing of g on Q_{8 pow2ceil(n)}.
inline Drawing embed_st_outerplanar(const StOuterplanarGraph& g) {
    std::size_t n = g.top.size() + (g.bottom.size() > 2 ? g.bottom.size() - 2 : 0);
    return embed_st_outerplanar(g, *cached_Q(st_universal_side(n))).drawing;
}

/// The black points of Q_n.
inline PointSet skew_riffle_superpattern(int n) {
    QuadSet q = build_Q(n);
    PointSet out;
    for (const auto& p : q.points) {
        if (p.tag == Tag::black) {
            out.push_back(p);
        }
    }
    return out;
}

} // namespace superpat
