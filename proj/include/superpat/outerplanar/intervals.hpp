#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <string>
#include <vector>

#include "superpat/error.hpp"

namespace superpat {

/// Closed integer interval [lo, hi].
struct Interval {
    int lo = 0;
    int hi = 0;
    int size() const { return hi - lo + 1; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

inline bool is_power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

inline int pow2ceil(int n) {
    int p = 1;
    while (p < n) {
        p *= 2;
    }
    return p;
}

/// Member of I_n: [1 + q 2^j, (q+1) 2^j] with j >= 1, inside [1, n].
inline bool in_dyadic_system(const Interval& iv, int n) {
    int len = iv.size();
    return len >= 2 && is_power_of_two(len) && iv.lo >= 1 && iv.hi <= n && (iv.lo - 1) % len == 0;
}

/// Every member of I_n, largest first, left to right within a size.
inline std::vector<Interval> dyadic_intervals(int n) {
    if (!is_power_of_two(n) || n < 2) {
        throw PreconditionError("dyadic_intervals: n must be a power of two >= 2");
    }
    std::vector<Interval> out;
    for (int len = n; len >= 2; len /= 2) {
        for (int lo = 1; lo <= n; lo += len) {
            out.push_back({lo, lo + len - 1});
        }
    }
    return out;
}

/// Sorted, disjoint, contiguous intervals of I_{4n} starting at 1, the i-th
/// of size >= max(2, sizes[i]). Found by a search over (index, end of the
/// previous interval) that keeps the smallest reachable end; throws if the
/// sizes sum past n or nothing fits.
inline std::vector<Interval> interval_allocate(const std::vector<int>& sizes, int n) {
    if (!is_power_of_two(n)) {
        throw PreconditionError("interval_allocate: n must be a power of two");
    }
    long long total = 0;
    for (int a : sizes) {
        if (a < 0) {
            throw PreconditionError("interval_allocate: negative size");
        }
        total += a;
    }
    if (total > n) {
        throw PreconditionError("interval_allocate: sizes sum to " + std::to_string(total) + " > " + std::to_string(n));
    }
    const int limit = 4 * n;
    const std::size_t k = sizes.size();
    // prev[i][c]: the cursor before interval i when interval i ends at c; -1 unreachable.
    std::vector<std::vector<int>> prev(k + 1, std::vector<int>(static_cast<std::size_t>(limit) + 1, -2));
    prev[0][0] = -1;
    for (std::size_t i = 0; i < k; ++i) {
        int need = std::max(2, sizes[i]);
        for (int c = 0; c <= limit; ++c) {
            if (prev[i][static_cast<std::size_t>(c)] == -2) {
                continue;
            }
            for (int p = 2; c + p <= limit; p *= 2) {
                if (p >= need && c % p == 0 && prev[i + 1][static_cast<std::size_t>(c + p)] == -2) {
                    prev[i + 1][static_cast<std::size_t>(c + p)] = c;
                }
            }
        }
    }
    int end = -1;
    for (int c = 0; c <= limit; ++c) {
        if (prev[k][static_cast<std::size_t>(c)] != -2) {
            end = c;
            break;
        }
    }
    if (end < 0) {
        throw InternalError("interval_allocate: no contiguous allocation inside [1, " + std::to_string(limit) + "]");
    }
    std::vector<Interval> out(k);
    for (std::size_t i = k; i-- > 0;) {
        int start = prev[i + 1][static_cast<std::size_t>(end)];
        out[i] = {start + 1, end};
        end = start;
    }
    return out;
}

} // namespace superpat
