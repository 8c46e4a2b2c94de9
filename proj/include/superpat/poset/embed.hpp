#pragma once

#include <cstddef>
#include <vector>

#include "superpat/perm/pattern.hpp"
#include "superpat/poset/drawing.hpp"
#include "superpat/superpattern/mu.hpp"

namespace superpat {

namespace detail {

inline Drawing place_on(const Drawing& d, const DrawingPermutation& dp, const PointSet& universal,
                        const std::vector<std::size_t>& point_at_text_pos, const Embedding& e) {
    Drawing out{d.graph, std::vector<Point>(d.graph.size())};
    for (std::size_t i = 0; i < e.positions.size(); ++i) {
        std::size_t v = dp.vertex_at[i];
        Point p = universal[point_at_text_pos[e.positions[i]]];
        p.label = d.graph.label(v);
        out.placement[v] = p;
    }
    auto check = verify_dominance_drawing(out);
    if (!check.ok) {
        throw InternalError("embed_drawing: result is not a dominance drawing (" + check.reason + ")");
    }
    return out;
}

} // namespace detail

/// Redraws d on points of `universal` by generic pattern search in the
/// sheared point set. Throws PreconditionError if it does not fit.
inline Drawing embed_drawing(const Drawing& d, const PointSet& universal) {
    DrawingPermutation dp = drawing_to_permutation(d);
    PointSet sheared = shear(universal);
    Permutation text = points_to_permutation(sheared);
    auto e = contains_pattern(text, dp.perm);
    if (!e) {
        throw PreconditionError("embed_drawing: drawing's permutation is not contained in the point set");
    }
    return detail::place_on(d, dp, universal, x_order(sheared), *e);
}

/// Redraws d on plot(mu(n)) (or the reduced variant) using the constructive
/// 321 embedding. The drawing's permutation must avoid 321 and have length
/// at most n.
inline Drawing embed_drawing_mu(const Drawing& d, std::size_t n, bool reduced = false) {
    DrawingPermutation dp = drawing_to_permutation(d);
    Board b = reduced ? reduced_mu_board(n) : mu_board(n);
    PointSet universal = plot(board_to_permutation(b));
    GridEmbedding ge = embed_321(dp.perm, n, reduced);
    Embedding e = to_embedding(CellIndex(b), ge);
    std::vector<std::size_t> identity(universal.size());
    for (std::size_t i = 0; i < identity.size(); ++i) {
        identity[i] = i;
    }
    return detail::place_on(d, dp, universal, identity, e);
}

} // namespace superpat
