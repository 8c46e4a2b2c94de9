#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superpat/error.hpp"
#include "superpat/outerplanar/intervals.hpp"
#include "superpat/perm/point_set.hpp"

namespace superpat {

/// One diagonal square [L, U]^2 of Q_m with the addresses of its points.
/// Side vectors are indexed by offset from L; green and yellow run bottom to top.
struct QuadSquare {
    Interval iv;
    std::vector<std::size_t> bottom; // (L + t, L)
    std::vector<std::size_t> top;    // (L + t, U)
    std::vector<std::size_t> left;   // (L, L + t)
    std::vector<std::size_t> right;  // (U, L + t)
    std::vector<std::size_t> green;  // two columns right of the square, low
    std::vector<std::size_t> yellow; // two rows above the square, at its left
    int side() const { return iv.size(); }
};

struct QuadSet {
    int m = 0;
    PointSet points;
    std::vector<QuadSquare> squares; // largest first, left to right
    std::map<std::pair<int, int>, std::size_t> square_at;
    std::size_t black = 0;
    std::size_t green = 0;
    std::size_t yellow = 0;

    const QuadSquare& square(const Interval& iv) const {
        auto it = square_at.find({iv.lo, iv.hi});
        if (it == square_at.end()) {
            throw PreconditionError("QuadSet: [" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) +
                                    "] is not a diagonal square of Q_" + std::to_string(m));
        }
        return squares[it->second];
    }
};

/// Q_m: the union of the hollow squares over every member of I_m, plus for
/// each square [L, U] with U < m a green column of U-L+1 points at
/// x = U + 7/4 with y inside (L, L + 1/2) and a yellow column of as many
/// points at x = L + 1/4 with y inside (U + 3/2, U + 2).
inline QuadSet build_Q(int m) {
    if (m < 2 || !is_power_of_two(m)) {
        throw PreconditionError("build_Q: m must be a power of two >= 2");
    }
    QuadSet q;
    q.m = m;
    std::map<std::pair<int, int>, std::size_t> black_at;
    auto black = [&](int x, int y) {
        auto [it, fresh] = black_at.emplace(std::pair{x, y}, q.points.size());
        if (fresh) {
            q.points.push_back({Rational(x), Rational(y), Tag::black, std::nullopt});
            ++q.black;
        }
        return it->second;
    };
    auto colored = [&](Rational x, Rational y, Tag tag) {
        q.points.push_back({x, y, tag, std::nullopt});
        return q.points.size() - 1;
    };
    for (const Interval& iv : dyadic_intervals(m)) {
        QuadSquare sq;
        sq.iv = iv;
        const int L = iv.lo, U = iv.hi, len = iv.size();
        for (int t = 0; t < len; ++t) {
            sq.bottom.push_back(black(L + t, L));
            sq.top.push_back(black(L + t, U));
        }
        for (int t = 0; t < len; ++t) {
            sq.left.push_back(black(L, L + t));
            sq.right.push_back(black(U, L + t));
        }
        if (U < m) {
            const Rational step(1, 2 * (len + 1));
            for (int t = 1; t <= len; ++t) {
                sq.green.push_back(colored(Rational(4 * U + 7, 4), Rational(L) + step * t, Tag::green));
            }
            for (int t = 1; t <= len; ++t) {
                sq.yellow.push_back(colored(Rational(4 * L + 1, 4), Rational(2 * U + 3, 2) + step * t, Tag::yellow));
            }
            q.green += static_cast<std::size_t>(len);
            q.yellow += static_cast<std::size_t>(len);
        }
        q.square_at[{L, U}] = q.squares.size();
        q.squares.push_back(std::move(sq));
    }
    return q;
}

/// log2 of a power of two.
inline int log2_exact(int m) {
    int k = 0;
    while ((1 << k) < m) {
        ++k;
    }
    return k;
}

} // namespace superpat
