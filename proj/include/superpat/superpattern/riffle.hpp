#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "superpat/error.hpp"
#include "superpat/perm/pattern.hpp"
#include "superpat/perm/point_set.hpp"

namespace superpat {

/// The perfect riffle (n+1) 1 (n+2) 2 ... (2n) n, length 2n.
inline Permutation riffle_full(std::size_t n) {
    std::vector<int> v;
    v.reserve(2 * n);
    for (std::size_t i = 1; i <= n; ++i) {
        v.push_back(static_cast<int>(n + i));
        v.push_back(static_cast<int>(i));
    }
    return Permutation(std::move(v));
}

/// Superpattern for riffles of length n: the perfect riffle without its
/// last entry, relabelled. Length 2n - 1.
inline Permutation riffle_superpattern(std::size_t n) {
    if (n == 0) {
        throw PreconditionError("riffle_superpattern: n must be positive");
    }
    Permutation full = riffle_full(n);
    std::vector<int> head(full.begin(), full.end() - 1);
    return Permutation::from_ranks(head);
}

inline Permutation antiriffle_superpattern(std::size_t n) { return inverse(riffle_superpattern(n)); }

/// If p is a riffle (an interleaving of 1..L with L+1..n, both increasing),
/// returns the smallest such L; otherwise nothing.
inline std::optional<std::size_t> riffle_split(const Permutation& p) {
    const std::size_t n = p.size();
    Permutation inv = inverse(p);
    // prefix_ok[L]: values 1..L appear left to right.
    std::vector<char> prefix_ok(n + 1, 1), suffix_ok(n + 2, 1);
    for (std::size_t v = 2; v <= n; ++v) {
        prefix_ok[v] = prefix_ok[v - 1] && inv[v - 1] > inv[v - 2];
    }
    for (std::size_t v = n; v-- > 1;) {
        // suffix_ok[v]: values v..n appear left to right (1-based v)
        suffix_ok[v] = suffix_ok[v + 1] && inv[v] > inv[v - 1];
    }
    for (std::size_t lower = 0; lower <= n; ++lower) {
        if (prefix_ok[lower] && suffix_ok[lower + 1]) {
            return lower;
        }
    }
    return std::nullopt;
}

inline bool is_riffle(const Permutation& p) { return riffle_split(p).has_value(); }
inline bool is_antiriffle(const Permutation& p) { return is_riffle(inverse(p)); }

/// Embeds a riffle of length <= n into riffle_superpattern(n). Entry i goes
/// to the large slot 2i of pair i when it belongs to the upper set and to the
/// small slot 2i+1 otherwise; lower entries after the last upper entry slide
/// back one pair so the dropped final slot is never needed.
inline Embedding embed_riffle(const Permutation& sigma, std::size_t n) {
    if (sigma.size() > n) {
        throw PreconditionError("embed_riffle: permutation longer than n");
    }
    auto split = riffle_split(sigma);
    if (!split) {
        throw PreconditionError("embed_riffle: permutation is not a riffle");
    }
    const int lower_max = static_cast<int>(*split);
    std::size_t last_upper = 0;
    bool any_upper = false;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] > lower_max) {
            last_upper = i;
            any_upper = true;
        }
    }
    Embedding e;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] > lower_max) {
            e.positions.push_back(2 * i);
        } else if (any_upper && i > last_upper) {
            e.positions.push_back(2 * i - 1);
        } else {
            e.positions.push_back(2 * i + 1);
        }
    }
    return e;
}

/// Transposes an embedding of inverse(pattern) in text into an embedding of
/// pattern in inverse(text).
inline Embedding transpose_embedding(const Permutation& text, const Permutation& pattern, const Embedding& e_inv) {
    Embedding out;
    out.positions.resize(pattern.size());
    for (std::size_t t = 0; t < pattern.size(); ++t) {
        std::size_t i = static_cast<std::size_t>(pattern[t] - 1);
        out.positions[t] = static_cast<std::size_t>(text[e_inv.positions[i]] - 1);
    }
    return out;
}

inline Embedding embed_antiriffle(const Permutation& q, std::size_t n) {
    Permutation qi = inverse(q);
    if (!is_riffle(qi)) {
        throw PreconditionError("embed_antiriffle: inverse is not a riffle");
    }
    return transpose_embedding(riffle_superpattern(n), q, embed_riffle(qi, n));
}

/// Hollow square of side n on the integer grid [1, n]^2: the horizontal sides
/// form a riffle superpattern, the vertical sides an antiriffle superpattern.
struct HollowSquare {
    PointSet points;
    /// Index of the point at (x, y) on the boundary, 1-based coordinates.
    std::map<std::pair<int, int>, std::size_t> at;
    int side = 0;

    std::size_t bottom(int x) const { return at.at({x, 1}); }
    std::size_t top(int x) const { return at.at({x, side}); }
    std::size_t left(int y) const { return at.at({1, y}); }
    std::size_t right(int y) const { return at.at({side, y}); }
};

inline HollowSquare hollow_square(int n) {
    if (n < 1) {
        throw PreconditionError("hollow_square: side must be positive");
    }
    HollowSquare sq;
    sq.side = n;
    auto add = [&](int x, int y) {
        if (sq.at.emplace(std::pair{x, y}, sq.points.size()).second) {
            sq.points.push_back({Rational(x), Rational(y), Tag::black, std::nullopt});
        }
    };
    for (int x = 1; x <= n; ++x) {
        add(x, 1);
    }
    for (int x = 1; x <= n; ++x) {
        add(x, n);
    }
    for (int y = 2; y < n; ++y) {
        add(1, y);
    }
    for (int y = 2; y < n; ++y) {
        add(n, y);
    }
    return sq;
}

inline PointSet combined_square(std::size_t n) { return hollow_square(static_cast<int>(n)).points; }

/// Draws a riffle of length <= side on the horizontal sides: entry i sits at
/// column i+1, on the bottom side if it is in the lower set, else on top.
/// Returns point indices into sq.points.
inline std::vector<std::size_t> place_riffle(const HollowSquare& sq, const Permutation& sigma) {
    auto split = riffle_split(sigma);
    if (!split || static_cast<int>(sigma.size()) > sq.side) {
        throw PreconditionError("place_riffle: not a riffle of length <= side");
    }
    if (sq.side == 1) {
        return std::vector<std::size_t>(sigma.size(), 0);
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        int x = static_cast<int>(i + 1);
        out.push_back(sigma[i] > static_cast<int>(*split) ? sq.top(x) : sq.bottom(x));
    }
    return out;
}

/// The transposed drawing of an antiriffle on the vertical sides.
inline std::vector<std::size_t> place_antiriffle(const HollowSquare& sq, const Permutation& q) {
    Permutation qi = inverse(q);
    auto split = riffle_split(qi);
    if (!split || static_cast<int>(q.size()) > sq.side) {
        throw PreconditionError("place_antiriffle: not an antiriffle of length <= side");
    }
    if (sq.side == 1) {
        return std::vector<std::size_t>(q.size(), 0);
    }
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < q.size(); ++t) {
        int y = q[t];
        bool upper = qi[static_cast<std::size_t>(y - 1)] > static_cast<int>(*split);
        out.push_back(upper ? sq.right(y) : sq.left(y));
    }
    return out;
}

} // namespace superpat
