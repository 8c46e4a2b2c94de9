#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "superpat/error.hpp"
#include "superpat/perm/permutation.hpp"

namespace superpat {

/// One nonzero cell of a chessboard. Rows count bottom-to-top, columns
/// left-to-right, both 0-based.
struct BoardCell {
    int row = 0;
    int col = 0;
    int count = 0;

    friend bool operator==(const BoardCell&, const BoardCell&) = default;
};

/// Chessboard representation: a nonnegative integer matrix stored sparsely
/// (the boards of the large superpatterns are mostly zero). Every row and
/// every column has a positive sum.
class Board {
public:
    Board() = default;

    /// Takes nonzero cells in any order; zero-count cells are dropped.
    Board(int rows, int cols, std::vector<BoardCell> cells) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) {
            throw PreconditionError("board dimensions must be nonnegative");
        }
        std::vector<long long> row_sum(static_cast<std::size_t>(rows), 0);
        std::vector<long long> col_sum(static_cast<std::size_t>(cols), 0);
        cells_.reserve(cells.size());
        for (const auto& c : cells) {
            if (c.count < 0 || c.row < 0 || c.row >= rows || c.col < 0 || c.col >= cols) {
                throw PreconditionError("board cell out of range or negative");
            }
            if (c.count == 0) {
                continue;
            }
            cells_.push_back(c);
            row_sum[static_cast<std::size_t>(c.row)] += c.count;
            col_sum[static_cast<std::size_t>(c.col)] += c.count;
        }
        std::sort(cells_.begin(), cells_.end(), [](const BoardCell& a, const BoardCell& b) {
            return std::tie(a.row, a.col) < std::tie(b.row, b.col);
        });
        for (std::size_t i = 1; i < cells_.size(); ++i) {
            if (cells_[i].row == cells_[i - 1].row && cells_[i].col == cells_[i - 1].col) {
                throw PreconditionError("board cell given twice");
            }
        }
        for (int r = 0; r < rows; ++r) {
            if (row_sum[static_cast<std::size_t>(r)] == 0) {
                throw PreconditionError("board row " + std::to_string(r + 1) + " is empty");
            }
        }
        for (int c = 0; c < cols; ++c) {
            if (col_sum[static_cast<std::size_t>(c)] == 0) {
                throw PreconditionError("board column " + std::to_string(c + 1) + " is empty");
            }
        }
    }

    /// Dense input, rows listed bottom-to-top.
    static Board from_dense(const std::vector<std::vector<int>>& rows_bottom_up) {
        const int rows = static_cast<int>(rows_bottom_up.size());
        const int cols = rows == 0 ? 0 : static_cast<int>(rows_bottom_up[0].size());
        std::vector<BoardCell> cells;
        for (int r = 0; r < rows; ++r) {
            if (static_cast<int>(rows_bottom_up[static_cast<std::size_t>(r)].size()) != cols) {
                throw PreconditionError("ragged board");
            }
            for (int c = 0; c < cols; ++c) {
                int v = rows_bottom_up[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                if (v != 0) {
                    cells.push_back({r, c, v});
                }
            }
        }
        return Board(rows, cols, std::move(cells));
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    /// Nonzero cells sorted by (row, col).
    const std::vector<BoardCell>& cells() const noexcept { return cells_; }

    int at(int row, int col) const {
        auto it = std::lower_bound(cells_.begin(), cells_.end(), BoardCell{row, col, 0},
                                   [](const BoardCell& a, const BoardCell& b) {
                                       return std::tie(a.row, a.col) < std::tie(b.row, b.col);
                                   });
        return (it != cells_.end() && it->row == row && it->col == col) ? it->count : 0;
    }

    long long total() const {
        long long t = 0;
        for (const auto& c : cells_) {
            t += c.count;
        }
        return t;
    }

    friend bool operator==(const Board&, const Board&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BoardCell> cells_;
};

/// Chessboard of a permutation. Columns are the maximal ascending runs;
/// rows are maximal runs of consecutive values occurring left to right.
inline Board board(const Permutation& p) {
    const std::size_t n = p.size();
    std::vector<int> col_of(n), row_of(n);
    int col = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && p[i] < p[i - 1]) {
            ++col;
        }
        col_of[i] = col;
    }
    Permutation inv = inverse(p);
    int row = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (v > 0 && inv[v] < inv[v - 1]) {
            ++row;
        }
        row_of[static_cast<std::size_t>(inv[v] - 1)] = row;
    }
    std::vector<BoardCell> cells;
    for (std::size_t i = 0; i < n; ++i) {
        cells.push_back({row_of[i], col_of[i], 1});
    }
    std::sort(cells.begin(), cells.end(), [](const BoardCell& a, const BoardCell& b) {
        return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    std::vector<BoardCell> merged;
    for (const auto& c : cells) {
        if (!merged.empty() && merged.back().row == c.row && merged.back().col == c.col) {
            ++merged.back().count;
        } else {
            merged.push_back(c);
        }
    }
    return Board(n == 0 ? 0 : row + 1, n == 0 ? 0 : col + 1, std::move(merged));
}

/// Where each cell of a board lands when expanded into a permutation.
struct CellPlacement {
    BoardCell cell;
    std::size_t first_position = 0; // 0-based
    int first_value = 0;            // 1-based
};

/// Expansion layout: columns take consecutive position blocks left to right
/// (cells inside a column by increasing row), rows take consecutive value
/// blocks bottom to top (cells inside a row by increasing column). Result is
/// sorted by (col, row), i.e. by position.
inline std::vector<CellPlacement> board_layout(const Board& m) {
    std::vector<CellPlacement> out;
    out.reserve(m.cells().size());
    // cells() is row-major, which is exactly the value order.
    int value = 1;
    for (const auto& c : m.cells()) {
        out.push_back({c, 0, value});
        value += c.count;
    }
    std::sort(out.begin(), out.end(), [](const CellPlacement& a, const CellPlacement& b) {
        return std::tie(a.cell.col, a.cell.row) < std::tie(b.cell.col, b.cell.row);
    });
    std::size_t pos = 0;
    for (auto& pl : out) {
        pl.first_position = pos;
        pos += static_cast<std::size_t>(pl.cell.count);
    }
    return out;
}

inline Permutation board_to_permutation(const Board& m) {
    std::vector<int> v(static_cast<std::size_t>(m.total()));
    for (const auto& pl : board_layout(m)) {
        for (int t = 0; t < pl.cell.count; ++t) {
            v[pl.first_position + static_cast<std::size_t>(t)] = pl.first_value + t;
        }
    }
    return Permutation(std::move(v));
}

/// Header "rows=R cols=C", then R lines of C integers, top row first.
inline std::string format_board(const Board& m) {
    std::vector<std::vector<int>> dense(static_cast<std::size_t>(m.rows()),
                                        std::vector<int>(static_cast<std::size_t>(m.cols()), 0));
    for (const auto& c : m.cells()) {
        dense[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)] = c.count;
    }
    std::string out = "rows=" + std::to_string(m.rows()) + " cols=" + std::to_string(m.cols()) + "\n";
    for (int r = m.rows() - 1; r >= 0; --r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) {
                out += ' ';
            }
            out += std::to_string(dense[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        }
        out += '\n';
    }
    return out;
}

inline Board parse_board(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string rows_tok, cols_tok;
    if (!(in >> rows_tok >> cols_tok) || rows_tok.rfind("rows=", 0) != 0 || cols_tok.rfind("cols=", 0) != 0) {
        throw ParseError("board text must start with 'rows=R cols=C'");
    }
    int rows = 0, cols = 0;
    try {
        rows = std::stoi(rows_tok.substr(5));
        cols = std::stoi(cols_tok.substr(5));
    } catch (const std::logic_error&) {
        throw ParseError("bad board header");
    }
    if (rows < 0 || cols < 0) {
        throw ParseError("bad board header");
    }
    std::vector<BoardCell> cells;
    for (int r = rows - 1; r >= 0; --r) {
        for (int c = 0; c < cols; ++c) {
            int v = 0;
            if (!(in >> v)) {
                throw ParseError("board text ended early");
            }
            if (v != 0) {
                cells.push_back({r, c, v});
            }
        }
    }
    std::string extra;
    if (in >> extra) {
        throw ParseError("trailing data after board");
    }
    try {
        return Board(rows, cols, std::move(cells));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

} // namespace superpat
