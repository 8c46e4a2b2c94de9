#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "superpat/error.hpp"
#include "superpat/perm/board.hpp"
#include "superpat/perm/pattern.hpp"

namespace superpat {

inline int ceil_sqrt(std::size_t n) {
    std::size_t s = 0;
    while (s * s < n) {
        ++s;
    }
    return static_cast<int>(s);
}

struct MuParams {
    std::size_t n = 0;
    int s = 0;          // ceil(sqrt(n))
    int g = 0;          // grid side 6n + 8s
    int band_width = 0; // 2s + 1
    int line_spacing = 0;

    explicit MuParams(std::size_t n_) : n(n_) {
        if (n == 0) {
            throw PreconditionError("mu: n must be positive");
        }
        s = ceil_sqrt(n);
        g = static_cast<int>(6 * n) + 8 * s;
        band_width = 2 * s + 1;
        line_spacing = s;
    }

    /// Highest blue line kept: all of them for the full board, the lowest
    /// 2s + 1 (k = 0..2s) for the reduced one.
    int max_line(bool reduced) const { return reduced ? 2 * s : g / s; }
};

/// Grid cells use x = column, y = row, both 1..g. Red band: 1 <= x - y <= 2s+1
/// (just below the diagonal). Blue lines: y - x = k s for k >= 0.
inline bool mu_cell(const MuParams& mp, int x, int y, bool reduced = false) {
    if (x < 1 || y < 1 || x > mp.g || y > mp.g) {
        return false;
    }
    int d = x - y;
    if (d >= 1 && d <= mp.band_width) {
        return true;
    }
    if (d > 0) {
        return false;
    }
    return (-d) % mp.s == 0 && (-d) / mp.s <= mp.max_line(reduced);
}

/// Number of nonzero cells, counted column by column without building the
/// board.
inline std::int64_t mu_count(std::size_t n, bool reduced = false) {
    MuParams mp(n);
    std::int64_t total = 0;
    const int kmax = mp.max_line(reduced);
    for (int x = 1; x <= mp.g; ++x) {
        int lo = std::max(1, x - mp.band_width), hi = x - 1;
        if (hi >= lo) {
            total += hi - lo + 1;
        }
        int lines = (mp.g - x) / mp.s; // k with x + k s <= g
        total += std::min(lines, kmax) + 1;
    }
    return total;
}

/// The two arithmetic series of the length count, summed directly.
inline std::int64_t mu_series(std::size_t n) {
    MuParams mp(n);
    std::int64_t g = mp.g, s = mp.s, total = 0;
    for (std::int64_t i = 1; i <= 2 * s + 1; ++i) {
        total += g - i;
    }
    for (std::int64_t k = 0; k <= g / s; ++k) {
        total += g - k * s;
    }
    return total;
}

inline Board mu_board_impl(std::size_t n, bool reduced) {
    MuParams mp(n);
    std::vector<BoardCell> cells;
    cells.reserve(static_cast<std::size_t>(mu_count(n, reduced)));
    for (int y = 1; y <= mp.g; ++y) {
        for (int x = std::max(1, y - mp.s * mp.max_line(reduced)); x <= std::min(mp.g, y + mp.band_width); ++x) {
            if (mu_cell(mp, x, y, reduced)) {
                cells.push_back({y - 1, x - 1, 1});
            }
        }
    }
    return Board(mp.g, mp.g, std::move(cells));
}

inline Board mu_board(std::size_t n) { return mu_board_impl(n, false); }
inline Board reduced_mu_board(std::size_t n) { return mu_board_impl(n, true); }
inline Permutation mu(std::size_t n) { return board_to_permutation(mu_board(n)); }
inline Permutation reduced_mu(std::size_t n) { return board_to_permutation(reduced_mu_board(n)); }

struct Decomposition321 {
    std::vector<std::size_t> upper; // 0-based indices of left-to-right maxima
    std::vector<std::size_t> lower;
};

inline Decomposition321 decompose_321(const Permutation& sigma) {
    Decomposition321 d;
    int top = 0, last_lower = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] > top) {
            top = sigma[i];
            d.upper.push_back(i);
        } else {
            if (sigma[i] < last_lower) {
                throw PreconditionError("decompose_321: permutation contains 321");
            }
            last_lower = sigma[i];
            d.lower.push_back(i);
        }
    }
    return d;
}

struct GridPoint {
    int x = 0;
    int y = 0;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

namespace detail {

/// Range add on a suffix, point query.
class SuffixAdder {
public:
    explicit SuffixAdder(std::size_t n) : tree_(n + 1, 0) {}

    void add_from(std::size_t i, std::int64_t delta) {
        for (std::size_t k = i + 1; k < tree_.size(); k += k & (~k + 1)) {
            tree_[k] += delta;
        }
    }

    std::int64_t at(std::size_t i) const {
        std::int64_t r = 0;
        for (std::size_t k = i + 1; k > 0; k -= k & (~k + 1)) {
            r += tree_[k];
        }
        return r;
    }

private:
    std::vector<std::int64_t> tree_;
};

/// Point i starts at (i+1, sigma_i). x order is index order and y order is
/// value order throughout, so "every point right of / above p" is a suffix
/// of indices / of values.
class ShiftGrid {
public:
    explicit ShiftGrid(const Permutation& sigma) : sigma_(sigma), dx_(sigma.size()), dy_(sigma.size()) {}

    GridPoint at(std::size_t i) const {
        return {static_cast<int>(static_cast<std::int64_t>(i + 1) + dx_.at(i)),
                static_cast<int>(sigma_[i] + dy_.at(static_cast<std::size_t>(sigma_[i] - 1)))};
    }
    void shift_right_from(std::size_t i, std::int64_t d) { dx_.add_from(i, d); }
    void shift_up_from(std::size_t i, std::int64_t d) { dy_.add_from(static_cast<std::size_t>(sigma_[i] - 1), d); }

    std::vector<GridPoint> all() const {
        std::vector<GridPoint> out;
        out.reserve(sigma_.size());
        for (std::size_t i = 0; i < sigma_.size(); ++i) {
            out.push_back(at(i));
        }
        return out;
    }

private:
    const Permutation& sigma_;
    SuffixAdder dx_, dy_;
};

inline void diagonalize(ShiftGrid& grid, const Decomposition321& d) {
    for (std::size_t u : d.upper) {
        GridPoint p = grid.at(u);
        if (p.y < p.x) {
            grid.shift_up_from(u, p.x - p.y);
        } else if (p.y > p.x) {
            grid.shift_right_from(u, p.y - p.x);
        }
    }
}

} // namespace detail

/// Upper points go onto the diagonal one at a time, left to right: a point
/// below it lifts everything at or above its row, a point above it pushes
/// everything at or right of its column. Result in 1-based (x, y).
inline std::vector<GridPoint> initial_diagonal_embed(const Permutation& sigma) {
    Decomposition321 d = decompose_321(sigma);
    detail::ShiftGrid grid(sigma);
    detail::diagonalize(grid, d);
    return grid.all();
}

struct GridEmbedding {
    std::vector<GridPoint> cells; // per sigma index
    int up_shifts = 0;
    int right_shifts = 0;
};

/// True when the cells are distinct, inside the grid, nonzero in the board
/// and order-isomorphic to sigma.
inline bool is_valid_grid_embedding(const Permutation& sigma, const GridEmbedding& e, const MuParams& mp,
                                    bool reduced = false) {
    if (e.cells.size() != sigma.size()) {
        return false;
    }
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (!mu_cell(mp, e.cells[i].x, e.cells[i].y, reduced)) {
            return false;
        }
        if (i > 0 && e.cells[i].x <= e.cells[i - 1].x) {
            return false;
        }
    }
    Permutation inv = inverse(sigma);
    for (std::size_t v = 1; v < sigma.size(); ++v) {
        if (e.cells[static_cast<std::size_t>(inv[v] - 1)].y <= e.cells[static_cast<std::size_t>(inv[v - 1] - 1)].y) {
            return false;
        }
    }
    return true;
}

/// Embeds a 321-avoider of length <= n into the grid of mu(n). After the
/// diagonal start, each lower point that sits i cells below the band gets
/// ceil(i/s + 1/2) upward shifts of s; one i cells above the band gets that
/// many rightward shifts. Throws InternalError if the result is not a valid
/// embedding or overruns the 4s shift budget.
inline GridEmbedding embed_321(const Permutation& sigma, std::size_t n, bool reduced = false) {
    if (sigma.size() > n) {
        throw PreconditionError("embed_321: permutation longer than n");
    }
    MuParams mp(n);
    Decomposition321 d = decompose_321(sigma);
    detail::ShiftGrid grid(sigma);
    detail::diagonalize(grid, d);
    const int s = mp.s;
    GridEmbedding e;
    auto shifts_for = [s](int i) { return (2 * i + s + 2 * s - 1) / (2 * s); };
    for (std::size_t l : d.lower) {
        GridPoint p = grid.at(l);
        int dist = p.x - p.y;
        if (dist > mp.band_width) {
            int u = shifts_for(dist - mp.band_width);
            e.up_shifts += u;
            grid.shift_up_from(l, static_cast<std::int64_t>(u) * s);
        } else if (dist < 1) {
            int u = shifts_for(1 - dist);
            e.right_shifts += u;
            grid.shift_right_from(l, static_cast<std::int64_t>(u) * s);
        }
    }
    e.cells = grid.all();
    if (e.up_shifts > 4 * s || e.right_shifts > 4 * s) {
        throw InternalError("embed_321: shift budget exceeded (" + std::to_string(e.up_shifts) + " up, " +
                            std::to_string(e.right_shifts) + " right, budget " + std::to_string(4 * s) + ")");
    }
    if (!is_valid_grid_embedding(sigma, e, mp, reduced)) {
        throw InternalError("embed_321: construction produced an invalid embedding");
    }
    return e;
}

/// Positions of the board's cells in the expanded permutation, for boards
/// whose cells all hold 1.
class CellIndex {
public:
    explicit CellIndex(const Board& b) {
        for (const auto& pl : board_layout(b)) {
            if (pl.cell.count != 1) {
                throw PreconditionError("CellIndex: board cells must be 0/1");
            }
            keys_.emplace_back(pl.cell.col, pl.cell.row);
        }
    }

    /// 0-based position of grid cell (x, y) (1-based column, row), if nonzero.
    std::optional<std::size_t> position(GridPoint p) const {
        std::pair<int, int> k{p.x - 1, p.y - 1};
        auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
        if (it == keys_.end() || *it != k) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - keys_.begin());
    }

private:
    std::vector<std::pair<int, int>> keys_; // (col, row), sorted
};

inline Embedding to_embedding(const CellIndex& index, const GridEmbedding& ge) {
    Embedding e;
    for (const auto& c : ge.cells) {
        auto pos = index.position(c);
        if (!pos) {
            throw InternalError("grid embedding uses an empty cell");
        }
        e.positions.push_back(*pos);
    }
    return e;
}

/// Classical n^2 superpattern: value (j-1)n + i at position (i-1)n + j.
inline Permutation generic_superpattern(std::size_t n) {
    if (n == 0) {
        throw PreconditionError("generic_superpattern: n must be positive");
    }
    std::vector<int> v(n * n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            v[(i - 1) * n + (j - 1)] = static_cast<int>((j - 1) * n + i);
        }
    }
    return Permutation(std::move(v));
}

struct SuperpatternCheck {
    bool ok = true;
    std::optional<Permutation> counterexample;
    std::size_t checked = 0;
};

/// Generic containment test of every length-n avoider of `forbidden`.
inline SuperpatternCheck verify_superpattern(const Permutation& sp, std::size_t n, std::span<const Permutation> forbidden,
                                             std::size_t guard = kDefaultEnumerationGuard) {
    SuperpatternCheck r;
    auto avoiders = enumerate_avoiders(n, forbidden, guard);
    TextIndex text(sp.values());
    for (const auto& p : avoiders) {
        ++r.checked;
        if (!text.find(p.values())) {
            r.ok = false;
            r.counterexample = p;
            return r;
        }
    }
    return r;
}

inline SuperpatternCheck verify_superpattern(const Permutation& sp, std::size_t n,
                                             std::initializer_list<Permutation> forbidden,
                                             std::size_t guard = kDefaultEnumerationGuard) {
    return verify_superpattern(sp, n, std::span<const Permutation>(forbidden.begin(), forbidden.size()), guard);
}

} // namespace superpat
