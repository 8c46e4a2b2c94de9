#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "superpat/outerplanar/graph.hpp"

namespace superpat {

/// Vertex rows: s is on the bottom row; t is on the top row when the last
/// path-to-path edge is upward (or there is none), else on the bottom row.
/// Cross edges include the implicit ones at s and t.
struct StRows {
    std::vector<std::size_t> top;
    std::vector<std::size_t> bottom;
    struct Cross {
        std::size_t top = 0;    // index into top row
        std::size_t bottom = 0; // index into bottom row
        Direction dir = Direction::up;
    };
    std::vector<Cross> cross; // sorted by (top, bottom)
};

inline StRows st_rows(const StModel& m) {
    StRows r;
    const std::size_t p = m.top_path.size() - 2, q = m.bottom_path.size() - 2;
    std::vector<StRows::Cross> cross;
    for (std::size_t k = 0; k < m.slots.size(); ++k) {
        auto [ti, bi] = m.slots[k];
        cross.push_back({ti - 1, bi, m.slot_dirs[k]});
    }
    std::sort(cross.begin(), cross.end(), [](const auto& a, const auto& b) {
        return a.top != b.top ? a.top < b.top : a.bottom < b.bottom;
    });
    bool t_top = cross.empty() || cross.back().dir == Direction::up;
    r.top.assign(m.top_path.begin() + 1, m.top_path.end() - 1);
    r.bottom.assign(m.bottom_path.begin(), m.bottom_path.end() - 1);
    (t_top ? r.top : r.bottom).push_back(m.t);
    // s -> a_1 (a_1 may be t for the single edge s -> t).
    r.cross.push_back({0, 0, Direction::up});
    r.cross.insert(r.cross.end(), cross.begin(), cross.end());
    if (p > 0 || q > 0) {
        if (t_top) {
            r.cross.push_back({p, q, Direction::up}); // b_q -> t
        } else {
            r.cross.push_back({p - 1, q + 1, Direction::down}); // a_p -> t
        }
    }
    return r;
}

/// One red/green then blue/yellow block. "top"/"bottom" name the row.
struct RegionBlock {
    std::vector<std::size_t> red_top, red_bottom, green;
    std::vector<std::size_t> blue_top, blue_bottom, yellow;

    std::vector<std::size_t> red() const { return cat(red_top, red_bottom); }
    std::vector<std::size_t> blue() const { return cat(blue_top, blue_bottom); }

    static std::vector<std::size_t> cat(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        std::vector<std::size_t> out(a);
        out.insert(out.end(), b.begin(), b.end());
        return out;
    }
};

struct RegionDecomposition {
    std::vector<RegionBlock> blocks;

    /// X_{2j-1} = R_j + G_j, X_{2j} = B_j + Y_j (the last one omitted when
    /// empty). Odd-numbered entries (index 0, 2, ...) are upward regions.
    std::vector<std::vector<std::size_t>> block_sequence() const {
        std::vector<std::vector<std::size_t>> x;
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            const auto& b = blocks[j];
            x.push_back(RegionBlock::cat(b.red(), b.green));
            auto down = RegionBlock::cat(b.blue(), b.yellow);
            if (!down.empty() || j + 1 < blocks.size()) {
                x.push_back(std::move(down));
            }
        }
        return x;
    }
};

/// Walks the runs of same-direction cross edges. A vertex on both a red and
/// the following blue region stays in the red one (and symmetrically).
inline RegionDecomposition decompose_regions(const StModel& m, const StRows& rows) {
    RegionDecomposition d;
    auto slice = [](const std::vector<std::size_t>& row, std::size_t from, std::size_t to_incl) {
        std::vector<std::size_t> out;
        for (std::size_t i = from; i <= to_incl && i < row.size(); ++i) {
            out.push_back(row[i]);
        }
        return out;
    };
    auto slice_open = [&](const std::vector<std::size_t>& row, std::size_t after, std::size_t before) {
        return before == 0 ? std::vector<std::size_t>{} : slice(row, after + 1, before - 1);
    };
    std::vector<std::vector<StRows::Cross>> runs;
    for (const auto& c : rows.cross) {
        if (runs.empty() || runs.back().front().dir != c.dir) {
            runs.emplace_back();
        }
        runs.back().push_back(c);
    }
    std::size_t top_pos = 0, bot_pos = 0;
    const std::size_t top_end = rows.top.size(), bot_end = rows.bottom.size();
    for (std::size_t r = 0; r < runs.size(); r += 2) {
        RegionBlock b;
        const auto& up = runs[r];
        const auto last_up = up.back();
        b.red_top = slice(rows.top, top_pos, last_up.top);
        b.red_bottom = slice(rows.bottom, bot_pos, last_up.bottom);
        top_pos = last_up.top + 1;
        if (r + 1 < runs.size()) {
            const auto& down = runs[r + 1];
            const auto first_down = down.front(), last_down = down.back();
            b.green = slice_open(rows.bottom, last_up.bottom, first_down.bottom);
            bot_pos = std::max(first_down.bottom, last_up.bottom + 1);
            b.blue_top = slice(rows.top, top_pos, last_down.top);
            b.blue_bottom = slice(rows.bottom, bot_pos, last_down.bottom);
            bot_pos = last_down.bottom + 1;
            if (r + 2 < runs.size()) {
                const auto first_up = runs[r + 2].front();
                b.yellow = slice_open(rows.top, last_down.top, first_up.top);
                top_pos = std::max(first_up.top, last_down.top + 1);
            } else {
                b.yellow = slice(rows.top, last_down.top + 1, top_end - 1);
                top_pos = top_end;
            }
        } else {
            b.green = slice(rows.bottom, last_up.bottom + 1, bot_end - 1);
            bot_pos = bot_end;
        }
        d.blocks.push_back(std::move(b));
    }
    std::vector<int> seen(m.dag.size(), 0);
    for (const auto& b : d.blocks) {
        for (const auto* part : {&b.red_top, &b.red_bottom, &b.green, &b.blue_top, &b.blue_bottom, &b.yellow}) {
            for (auto v : *part) {
                ++seen[v];
            }
        }
    }
    for (std::size_t v = 0; v < seen.size(); ++v) {
        if (seen[v] != 1) {
            throw InternalError("decompose_regions: vertex '" + m.dag.label(v) + "' covered " +
                                std::to_string(seen[v]) + " times");
        }
    }
    return d;
}

inline RegionDecomposition decompose_regions(const StOuterplanarGraph& g) {
    StModel m = st_model(g);
    return decompose_regions(m, st_rows(m));
}

struct FactCheck {
    bool ok = true;
    int fact = 0; // 1..6 when a reachability fact fails, 0 for a partition failure
    std::size_t block = 0;
    std::string detail;
};

/// Checks the six reachability facts for every block against the closure.
/// Fact 6's "bottom row of R_i" is read as the bottom row of R_{i+1}.
inline FactCheck verify_facts(const Dag& g, const RegionDecomposition& d) {
    FactCheck res;
    auto reach = reachability(g);
    std::vector<int> seen(g.size(), 0);
    for (const auto& b : d.blocks) {
        for (const auto* part : {&b.red_top, &b.red_bottom, &b.green, &b.blue_top, &b.blue_bottom, &b.yellow}) {
            for (auto v : *part) {
                if (v >= g.size()) {
                    res.ok = false;
                    res.detail = "vertex out of range";
                    return res;
                }
                ++seen[v];
            }
        }
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (seen[v] != 1) {
            res.ok = false;
            res.detail = "regions do not partition the vertices ('" + g.label(v) + "')";
            return res;
        }
    }
    using Set = std::vector<std::size_t>;
    auto all = [&](const Set& from, const Set& to) {
        for (auto u : from) {
            for (auto v : to) {
                if (!reach[u].test(v)) {
                    return false;
                }
            }
        }
        return true;
    };
    auto none = [&](const Set& from, const Set& to) {
        for (auto u : from) {
            for (auto v : to) {
                if (reach[u].test(v)) {
                    return false;
                }
            }
        }
        return true;
    };
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const auto& b = d.blocks[i];
        Set R = b.red(), B = b.blue();
        auto fail = [&](int fact, const char* what) {
            res.ok = false;
            res.fact = fact;
            res.block = i;
            res.detail = what;
            return res;
        };
        if (!all(R, B) || !all(R, b.yellow) || !all(b.red_bottom, b.green) || !none(b.red_top, b.green)) {
            return fail(1, "red region reachability");
        }
        if (!all(b.green, b.blue_bottom) || !none(b.green, b.yellow) || !none(b.green, R) ||
            !none(b.green, b.blue_top)) {
            return fail(2, "green region reachability");
        }
        if (!none(B, R) || !none(B, b.green) || !all(b.blue_top, b.yellow) || !none(b.blue_bottom, b.yellow)) {
            return fail(3, "blue region reachability");
        }
        if (!none(b.yellow, R) || !none(b.yellow, B) || !none(b.yellow, b.green)) {
            return fail(4, "yellow region reachability");
        }
        if (i + 1 < d.blocks.size()) {
            const auto& n = d.blocks[i + 1];
            if (!all(B, n.red())) {
                return fail(5, "blue to next red");
            }
            if (!all(b.yellow, n.red_top) || !none(b.yellow, n.green) || !none(b.yellow, n.red_bottom)) {
                return fail(6, "yellow to next block");
            }
        }
    }
    return res;
}

} // namespace superpat
