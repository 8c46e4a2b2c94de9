#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "superpat/error.hpp"

namespace superpat {

/// A permutation in one-line notation: values are exactly {1, ..., n}.
/// Positions are 0-based in the API; values are 1-based as written.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
        std::vector<char> seen(values_.size() + 1, 0);
        for (int v : values_) {
            if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[v]) {
                throw PreconditionError("not a permutation of 1.." + std::to_string(values_.size()));
            }
            seen[v] = 1;
        }
    }

    Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

    /// The identity permutation 12...n.
    static Permutation identity(std::size_t n) {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = static_cast<int>(i + 1);
        }
        return Permutation(std::move(v));
    }

    /// Relabels any sequence of distinct integers by rank ("standardization").
    static Permutation from_ranks(std::span<const int> distinct) {
        std::vector<std::size_t> order(distinct.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return distinct[a] < distinct[b]; });
        std::vector<int> v(distinct.size());
        for (std::size_t r = 0; r < order.size(); ++r) {
            v[order[r]] = static_cast<int>(r + 1);
        }
        for (std::size_t r = 1; r < order.size(); ++r) {
            if (distinct[order[r]] == distinct[order[r - 1]]) {
                throw PreconditionError("from_ranks: repeated value");
            }
        }
        return Permutation(std::move(v));
    }

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    int operator[](std::size_t i) const { return values_[i]; }
    std::span<const int> values() const noexcept { return values_; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

/// q with q[p[i]] = i.
inline Permutation inverse(const Permutation& p) {
    std::vector<int> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        q[p[i] - 1] = static_cast<int>(i + 1);
    }
    return Permutation(std::move(q));
}

/// Concatenation along the main diagonal: `second` is placed to the right of
/// `first` with every value raised by |first|.
inline Permutation skew_sum(const Permutation& first, const Permutation& second) {
    std::vector<int> v(first.begin(), first.end());
    for (int x : second) {
        v.push_back(x + static_cast<int>(first.size()));
    }
    return Permutation(std::move(v));
}

/// Whitespace-separated one-line notation, e.g. "4 1 5 2 6 3".
inline std::string format_permutation(const Permutation& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) {
            out += ' ';
        }
        out += std::to_string(p[i]);
    }
    return out;
}

/// Parses whitespace-separated notation. A single token of digits with no
/// spaces (e.g. "2413") is read digit by digit, which is convenient for n <= 9.
inline Permutation parse_permutation(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) {
        tokens.push_back(tok);
    }
    std::vector<int> values;
    if (tokens.size() == 1 && tokens[0].size() > 1) {
        for (char c : tokens[0]) {
            if (c < '1' || c > '9') {
                throw ParseError("bad permutation token '" + tokens[0] + "'");
            }
            values.push_back(c - '0');
        }
    } else {
        for (const auto& tok : tokens) {
            try {
                std::size_t used = 0;
                values.push_back(std::stoi(tok, &used));
                if (used != tok.size()) {
                    throw ParseError("bad permutation token '" + tok + "'");
                }
            } catch (const std::logic_error&) {
                throw ParseError("bad permutation token '" + tok + "'");
            }
        }
    }
    try {
        return Permutation(std::move(values));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

} // namespace superpat
