#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "superpat/error.hpp"
#include "superpat/perm/permutation.hpp"

namespace superpat {

/// Witness of pattern containment: strictly increasing 0-based positions
/// into the text, one per pattern entry.
struct Embedding {
    std::vector<std::size_t> positions;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Order-isomorphism validator: positions strictly increasing, in range, and
/// text values at those positions compare exactly like the pattern's values.
inline bool is_valid_embedding(std::span<const int> text, std::span<const int> pattern,
                               const Embedding& e) {
    const auto& pos = e.positions;
    if (pos.size() != pattern.size()) {
        return false;
    }
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (pos[i] >= text.size() || (i > 0 && pos[i] <= pos[i - 1])) {
            return false;
        }
    }
    for (std::size_t i = 0; i < pos.size(); ++i) {
        for (std::size_t j = i + 1; j < pos.size(); ++j) {
            if ((pattern[i] < pattern[j]) != (text[pos[i]] < text[pos[j]])) {
                return false;
            }
        }
    }
    return true;
}

inline bool is_valid_embedding(const Permutation& text, const Permutation& pattern,
                               const Embedding& e) {
    return is_valid_embedding(text.values(), pattern.values(), e);
}

namespace detail {
class PatternMatcher;
}

/// Preprocessed text for repeated searches. Values are replaced by their
/// ranks, and a sparse table over "position of rank r" answers "is there an
/// entry at or after position c whose rank lies in (lo, hi)" in O(1).
class TextIndex {
public:
    explicit TextIndex(std::span<const int> text) : n_(text.size()), rank_(text.size()) {
        std::vector<std::size_t> order(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return text[a] < text[b]; });
        for (std::size_t r = 0; r < n_; ++r) {
            rank_[order[r]] = static_cast<int>(r);
            if (r > 0 && text[order[r]] == text[order[r - 1]]) {
                throw PreconditionError("pattern search: text values must be distinct");
            }
        }
        table_.emplace_back(n_);
        for (std::size_t r = 0; r < n_; ++r) {
            table_[0][r] = static_cast<int>(order[r]);
        }
        for (std::size_t w = 1; (std::size_t{1} << w) <= n_; ++w) {
            const std::size_t half = std::size_t{1} << (w - 1);
            std::vector<int> row(n_ - (std::size_t{1} << w) + 1);
            for (std::size_t r = 0; r < row.size(); ++r) {
                row[r] = std::max(table_[w - 1][r], table_[w - 1][r + half]);
            }
            table_.push_back(std::move(row));
        }
    }

    std::size_t size() const noexcept { return n_; }

    std::optional<Embedding> find(std::span<const int> pattern) const;

private:
    friend class detail::PatternMatcher;

    // Some entry at position >= start has rank strictly between lo and hi.
    bool any_from(std::size_t start, int lo, int hi) const {
        if (hi - lo < 2 || start >= n_) {
            return false;
        }
        auto a = static_cast<std::size_t>(lo + 1), b = static_cast<std::size_t>(hi); // [a, b)
        std::size_t w = static_cast<std::size_t>(std::bit_width(b - a)) - 1;
        int best = std::max(table_[w][a], table_[w][b - (std::size_t{1} << w)]);
        return static_cast<std::size_t>(best) >= start;
    }

    std::size_t n_;
    std::vector<int> rank_;
    std::vector<std::vector<int>> table_;
};

namespace detail {

// Backtracking matcher working on text ranks. Pattern entry k must land
// strictly between the text ranks matched at its nearest smaller and nearest
// larger earlier entries. After each placement every unplaced entry must
// still have some candidate to the right inside its current value window;
// otherwise the branch is cut.
class PatternMatcher {
public:
    PatternMatcher(const TextIndex& text, std::span<const int> pattern)
        : text_(text), k_(pattern.size()), below_(k_ * k_, -1), above_(k_ * k_, -1), pos_(k_) {
        // below_[k * k_ + j]: among entries 0..k, the one with the largest
        // pattern value under pattern[j] (for j > k); same for above_.
        for (std::size_t k = 0; k < k_; ++k) {
            for (std::size_t j = k + 1; j < k_; ++j) {
                int lo = -1, hi = -1;
                for (std::size_t i = 0; i <= k; ++i) {
                    if (pattern[i] < pattern[j] && (lo < 0 || pattern[i] > pattern[static_cast<std::size_t>(lo)])) {
                        lo = static_cast<int>(i);
                    }
                    if (pattern[i] > pattern[j] && (hi < 0 || pattern[i] < pattern[static_cast<std::size_t>(hi)])) {
                        hi = static_cast<int>(i);
                    }
                }
                below_[k * k_ + j] = lo;
                above_[k * k_ + j] = hi;
            }
        }
    }

    std::optional<Embedding> run() {
        if (k_ > text_.size()) {
            return std::nullopt;
        }
        if (k_ == 0 || search(0, 0)) {
            return Embedding{pos_};
        }
        return std::nullopt;
    }

private:
    int low_rank(std::size_t placed, std::size_t j) const {
        int i = placed == 0 ? -1 : below_[(placed - 1) * k_ + j];
        return i < 0 ? -1 : text_.rank_[pos_[static_cast<std::size_t>(i)]];
    }
    int high_rank(std::size_t placed, std::size_t j) const {
        int i = placed == 0 ? -1 : above_[(placed - 1) * k_ + j];
        return i < 0 ? static_cast<int>(text_.size()) : text_.rank_[pos_[static_cast<std::size_t>(i)]];
    }

    bool search(std::size_t k, std::size_t start) {
        const std::size_t last = text_.size() - (k_ - k);
        const int lo = low_rank(k, k), hi = high_rank(k, k);
        for (std::size_t c = start; c <= last; ++c) {
            const int r = text_.rank_[c];
            if (r <= lo || r >= hi) {
                continue;
            }
            pos_[k] = c;
            if (k + 1 == k_) {
                return true;
            }
            bool feasible = true;
            for (std::size_t j = k + 1; j < k_ && feasible; ++j) {
                feasible = text_.any_from(c + 1, low_rank(k + 1, j), high_rank(k + 1, j));
            }
            if (feasible && search(k + 1, c + 1)) {
                return true;
            }
        }
        return false;
    }

    const TextIndex& text_;
    std::size_t k_;
    std::vector<int> below_;
    std::vector<int> above_;
    std::vector<std::size_t> pos_;
};

} // namespace detail

inline std::optional<Embedding> TextIndex::find(std::span<const int> pattern) const {
    return detail::PatternMatcher(*this, pattern).run();
}

/// Searches `text` (any sequence of distinct integers) for an occurrence of
/// `pattern`. Exponential in the worst case.
inline std::optional<Embedding> find_pattern(std::span<const int> text, std::span<const int> pattern) {
    return TextIndex(text).find(pattern);
}

inline std::optional<Embedding> contains_pattern(const Permutation& text, const Permutation& pattern) {
    return find_pattern(text.values(), pattern.values());
}

inline bool avoids(const Permutation& text, std::span<const Permutation> forbidden) {
    for (const auto& f : forbidden) {
        if (find_pattern(text.values(), f.values())) {
            return false;
        }
    }
    return true;
}

inline bool avoids(const Permutation& text, const Permutation& forbidden) {
    return !find_pattern(text.values(), forbidden.values());
}

inline constexpr std::size_t kDefaultEnumerationGuard = 11;

/// All length-n permutations avoiding every forbidden pattern, in
/// lexicographic order. Built prefix by prefix: a prefix containing a
/// forbidden pattern has no avoiding extension.
inline std::vector<Permutation> enumerate_avoiders(std::size_t n, std::span<const Permutation> forbidden,
                                                   std::size_t guard = kDefaultEnumerationGuard) {
    if (n > guard) {
        throw SizeGuardError("enumerate_avoiders: n = " + std::to_string(n) + " exceeds guard " +
                             std::to_string(guard));
    }
    std::vector<Permutation> out;
    std::vector<int> prefix;
    std::vector<char> used(n + 1, 0);
    auto extend = [&](auto&& self) -> void {
        if (prefix.size() == n) {
            out.emplace_back(prefix);
            return;
        }
        for (int v = 1; v <= static_cast<int>(n); ++v) {
            if (used[v]) {
                continue;
            }
            prefix.push_back(v);
            bool ok = true;
            for (const auto& f : forbidden) {
                if (f.size() <= prefix.size() && find_pattern(prefix, f.values())) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used[v] = 1;
                self(self);
                used[v] = 0;
            }
            prefix.pop_back();
        }
    };
    extend(extend);
    return out;
}

inline std::vector<Permutation> enumerate_avoiders(std::size_t n, std::initializer_list<Permutation> forbidden,
                                                   std::size_t guard = kDefaultEnumerationGuard) {
    std::vector<Permutation> f(forbidden);
    return enumerate_avoiders(n, std::span<const Permutation>(f), guard);
}

} // namespace superpat
