#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "superpat/error.hpp"
#include "superpat/poset/dag.hpp"

namespace superpat {

enum class Direction { up, down };

/// Edge between the two paths: up goes bottom -> top, down goes top -> bottom.
struct InteriorEdge {
    std::string from;
    std::string to;
    Direction dir = Direction::up;
};

/// Two directed s-t paths bordering the outer face plus edges between their
/// interiors. The paths share only s and t.
struct StOuterplanarGraph {
    std::vector<std::string> top;
    std::vector<std::string> bottom;
    std::vector<InteriorEdge> interior;
};

struct StValidation {
    bool ok = true;
    std::string diagnostic;
    /// Indices into interior of two crossing edges, when that is the failure.
    std::optional<std::pair<std::size_t, std::size_t>> crossing;
};

/// The graph as a Dag plus row bookkeeping. Vertex ids: the top path in
/// order (s first, t last), then the bottom interior.
struct StModel {
    Dag dag;
    std::size_t s = 0;
    std::size_t t = 0;
    std::vector<std::size_t> top_path;    // s, a_1..a_p, t
    std::vector<std::size_t> bottom_path; // s, b_1..b_q, t
    /// Per interior edge: (index into top_path, index into bottom_path).
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::vector<Direction> slot_dirs;
};

namespace detail {

inline StModel build_model(const StOuterplanarGraph& g) {
    const auto& T = g.top;
    const auto& B = g.bottom;
    if (T.size() < 2 || B.size() < 2) {
        throw PreconditionError("each path needs at least s and t");
    }
    if (T.front() != B.front() || T.back() != B.back()) {
        throw PreconditionError("paths must share first vertex s and last vertex t");
    }
    if (T.front() == T.back()) {
        throw PreconditionError("s and t must differ");
    }
    std::vector<std::string> labels(T.begin(), T.end());
    labels.insert(labels.end(), B.begin() + 1, B.end() - 1);
    std::map<std::string, std::size_t> id;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!id.emplace(labels[i], i).second) {
            throw PreconditionError("vertex '" + labels[i] + "' appears twice (paths must be simple and share only s, t)");
        }
    }
    StModel m;
    m.s = 0;
    m.t = T.size() - 1;
    for (std::size_t i = 0; i < T.size(); ++i) {
        m.top_path.push_back(i);
    }
    m.bottom_path.push_back(m.s);
    for (std::size_t j = 1; j + 1 < B.size(); ++j) {
        m.bottom_path.push_back(id.at(B[j]));
    }
    m.bottom_path.push_back(m.t);

    std::vector<Edge> edges;
    for (const auto* path : {&m.top_path, &m.bottom_path}) {
        for (std::size_t i = 1; i < path->size(); ++i) {
            edges.emplace_back((*path)[i - 1], (*path)[i]);
        }
    }
    std::map<std::string, std::size_t> top_pos, bottom_pos;
    for (std::size_t i = 1; i + 1 < T.size(); ++i) {
        top_pos[T[i]] = i;
    }
    for (std::size_t j = 1; j + 1 < B.size(); ++j) {
        bottom_pos[B[j]] = j;
    }
    for (const auto& e : g.interior) {
        const std::string& lo = e.dir == Direction::up ? e.from : e.to;
        const std::string& hi = e.dir == Direction::up ? e.to : e.from;
        auto ti = top_pos.find(hi);
        auto bi = bottom_pos.find(lo);
        if (ti == top_pos.end() || bi == bottom_pos.end()) {
            throw PreconditionError("interior edge " + e.from + " -> " + e.to +
                                    " must join a top interior vertex and a bottom interior vertex in its direction");
        }
        m.slots.emplace_back(ti->second, bi->second);
        m.slot_dirs.push_back(e.dir);
        edges.emplace_back(id.at(e.from), id.at(e.to));
    }
    if (std::set<std::pair<std::size_t, std::size_t>>(m.slots.begin(), m.slots.end()).size() != m.slots.size()) {
        throw PreconditionError("interior edge repeated");
    }
    m.dag = Dag(std::move(labels), edges);
    return m;
}

} // namespace detail

/// Checks path shape, non-crossing interior edges, acyclicity, single
/// source and sink, and transitive reduction.
inline StValidation validate(const StOuterplanarGraph& g) {
    StValidation r;
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.diagnostic = std::move(msg);
        return r;
    };
    StModel m;
    try {
        m = detail::build_model(g);
    } catch (const PreconditionError& e) {
        return fail(e.what());
    }
    for (std::size_t a = 0; a < m.slots.size(); ++a) {
        for (std::size_t b = a + 1; b < m.slots.size(); ++b) {
            auto [ta, ba] = m.slots[a];
            auto [tb, bb] = m.slots[b];
            if ((ta < tb && ba > bb) || (ta > tb && ba < bb)) {
                r.crossing = std::pair{a, b};
                return fail("interior edges " + g.interior[a].from + "->" + g.interior[a].to + " and " +
                            g.interior[b].from + "->" + g.interior[b].to + " cross");
            }
        }
    }
    for (std::size_t v = 0; v < m.dag.size(); ++v) {
        if (v != m.s && m.dag.in(v).empty()) {
            return fail("extra source '" + m.dag.label(v) + "'");
        }
        if (v != m.t && m.dag.out(v).empty()) {
            return fail("extra sink '" + m.dag.label(v) + "'");
        }
    }
    if (!is_transitively_reduced(m.dag)) {
        auto red = transitive_reduction(m.dag).edges();
        for (auto e : m.dag.edges()) {
            if (!std::binary_search(red.begin(), red.end(), e)) {
                return fail("not transitively reduced: edge " + m.dag.label(e.first) + "->" + m.dag.label(e.second) +
                            " is implied by a longer path");
            }
        }
    }
    return r;
}

inline StModel st_model(const StOuterplanarGraph& g) {
    auto v = validate(g);
    if (!v.ok) {
        throw PreconditionError("invalid st-outerplanar graph: " + v.diagnostic);
    }
    return detail::build_model(g);
}

} // namespace superpat
