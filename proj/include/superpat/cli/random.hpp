#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "superpat/outerplanar/graph.hpp"
#include "superpat/perm/permutation.hpp"
#include "superpat/poset/dag.hpp"

namespace superpat {

/// Seeded source for every generator. Raw mt19937_64 output; bounded values
/// by rejection sampling, so streams are identical on every platform (the
/// std distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r = 0;
        do {
            r = eng_();
        } while (r >= limit);
        return r % n;
    }

    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template <class T> void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 eng_;
};

inline Permutation random_permutation(std::size_t n, Rng& rng) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    rng.shuffle(v);
    return Permutation(std::move(v));
}

/// Interleaves 1..L with L+1..n for a random L and random slots.
inline Permutation random_riffle(std::size_t n, Rng& rng) {
    std::size_t low = rng.below(n + 1);
    std::vector<char> is_low(n, 0);
    std::fill(is_low.begin(), is_low.begin() + static_cast<std::ptrdiff_t>(low), 1);
    rng.shuffle(is_low);
    std::vector<int> v(n);
    int lo = 1, hi = static_cast<int>(low) + 1;
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = is_low[i] ? lo++ : hi++;
    }
    return Permutation(std::move(v));
}

/// A random merge of two increasing sequences, so it avoids 321.
inline Permutation random_321_avoider(std::size_t n, Rng& rng) {
    std::size_t k = rng.below(n + 1);
    std::vector<char> first_value(n, 0), first_slot(n, 0);
    std::fill(first_value.begin(), first_value.begin() + static_cast<std::ptrdiff_t>(k), 1);
    std::fill(first_slot.begin(), first_slot.begin() + static_cast<std::ptrdiff_t>(k), 1);
    rng.shuffle(first_value);
    rng.shuffle(first_slot);
    std::vector<int> a, b;
    for (std::size_t v = 0; v < n; ++v) {
        (first_value[v] ? a : b).push_back(static_cast<int>(v + 1));
    }
    std::vector<int> out(n);
    std::size_t ai = 0, bi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = first_slot[i] ? a[ai++] : b[bi++];
    }
    return Permutation(std::move(out));
}

/// Two chains from a random split of 0..n-1, random forward cross edges
/// (each with probability 1/4), then transitive reduction.
inline Dag random_width2_dag(std::size_t n, Rng& rng) {
    std::vector<int> side(n);
    for (auto& s : side) {
        s = static_cast<int>(rng.below(2));
    }
    std::vector<Edge> edges;
    for (int s = 0; s < 2; ++s) {
        std::size_t prev = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (side[v] == s) {
                if (prev != n) {
                    edges.emplace_back(prev, v);
                }
                prev = v;
            }
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (side[u] != side[v] && rng.chance(1, 4)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return transitive_reduction(Dag::unlabelled(n, edges));
}

/// Vertex i > 0 gets a uniform parent in [0, i).
inline Dag random_tree(std::size_t n, Rng& rng) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        edges.emplace_back(rng.below(i), i);
    }
    return Dag::unlabelled(n, edges);
}

/// Two paths s..t with p and q interior vertices (p + q = n - 2, both >= 1),
/// then 3n random interior edges tried, each kept when the graph stays
/// planar, acyclic and transitively reduced. n = 2 gives the single edge;
/// n = 3 has no such graph.
inline StOuterplanarGraph random_st_outerplanar(std::size_t n, Rng& rng) {
    if (n == 2) {
        return {{"s", "t"}, {"s", "t"}, {}};
    }
    if (n < 4) {
        throw PreconditionError("random_st_outerplanar: n must be 2 or at least 4");
    }
    const std::size_t p = 1 + rng.below(n - 3), q = n - 2 - p;
    StOuterplanarGraph g;
    g.top.push_back("s");
    g.bottom.push_back("s");
    for (std::size_t i = 1; i <= p; ++i) {
        g.top.push_back("a" + std::to_string(i));
    }
    for (std::size_t j = 1; j <= q; ++j) {
        g.bottom.push_back("b" + std::to_string(j));
    }
    g.top.push_back("t");
    g.bottom.push_back("t");

    // ids: s = 0, a_i = i, t = p + 1, b_j = p + 1 + j
    const std::size_t t = p + 1;
    auto bottom_id = [&](std::size_t j) { return p + 1 + j; };
    std::vector<Bits> reach(n, Bits(n));
    std::vector<Edge> edges;
    auto add = [&](std::size_t u, std::size_t v) {
        for (std::size_t x = 0; x < n; ++x) {
            if (x == u || reach[x].test(u)) {
                reach[x] |= reach[v];
                reach[x].set(v);
            }
        }
        edges.emplace_back(u, v);
    };
    for (std::size_t i = 0; i <= p; ++i) {
        add(i, i + 1);
    }
    add(0, bottom_id(1));
    for (std::size_t j = 1; j < q; ++j) {
        add(bottom_id(j), bottom_id(j + 1));
    }
    add(bottom_id(q), t);

    // Sorted cross-edge slots (i, j); candidates are drawn inside a random
    // gap between neighbouring slots so they rarely cross.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t k = 0; k < 3 * n; ++k) {
        std::size_t gap = rng.below(slots.size() + 1);
        auto lo = gap == 0 ? std::pair<std::size_t, std::size_t>{1, 1} : slots[gap - 1];
        auto hi = gap == slots.size() ? std::pair<std::size_t, std::size_t>{p, q} : slots[gap];
        if (hi.first < lo.first || hi.second < lo.second) {
            continue;
        }
        std::size_t i = lo.first + rng.below(hi.first - lo.first + 1);
        std::size_t j = lo.second + rng.below(hi.second - lo.second + 1);
        bool up = rng.chance(1, 2);
        bool crosses = false;
        for (auto [si, sj] : slots) {
            if ((si == i && sj == j) || (si < i && sj > j) || (si > i && sj < j)) {
                crosses = true;
                break;
            }
        }
        if (crosses) {
            continue;
        }
        std::size_t u = up ? bottom_id(j) : i, v = up ? i : bottom_id(j);
        if (reach[u].test(v) || reach[v].test(u)) {
            continue;
        }
        bool redundant = false;
        for (auto [x, y] : edges) {
            if ((x == u || reach[x].test(u)) && (y == v || reach[v].test(y))) {
                redundant = true;
                break;
            }
        }
        if (redundant) {
            continue;
        }
        add(u, v);
        slots.insert(std::lower_bound(slots.begin(), slots.end(), std::pair{i, j}), std::pair{i, j});
        if (up) {
            g.interior.push_back({g.bottom[j], g.top[i], Direction::up});
        } else {
            g.interior.push_back({g.top[i], g.bottom[j], Direction::down});
        }
    }
    return g;
}

} // namespace superpat
