#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "superpat/poset/drawing.hpp"

namespace superpat {

/// Two disjoint chains covering every vertex; b may be empty.
struct ChainPair {
    std::vector<std::size_t> a;
    std::vector<std::size_t> b;
};

/// Width is at least three; carries three pairwise incomparable vertices.
class AntichainError : public PreconditionError {
public:
    explicit AntichainError(std::array<std::size_t, 3> w)
        : PreconditionError("order has width >= 3 (antichain of three vertices)"), witness(w) {}
    std::array<std::size_t, 3> witness;
};

namespace detail {

inline std::array<std::size_t, 3> find_antichain3(const std::vector<Bits>& reach) {
    const std::size_t n = reach.size();
    std::vector<Bits> incomparable(n, Bits(n));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v && !reach[u].test(v) && !reach[v].test(u)) {
                incomparable[u].set(v);
            }
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        for (auto v = incomparable[u].find_next(u); v != Bits::npos; v = incomparable[u].find_next(v)) {
            Bits both = incomparable[u] & incomparable[v];
            auto w = both.find_next(v);
            if (w != Bits::npos) {
                return {u, v, w};
            }
        }
    }
    throw InternalError("width above 2 but no antichain of three found");
}

} // namespace detail

/// Minimum chain partition by bipartite matching on the comparability
/// relation (n minus a maximum matching chains). Throws AntichainError with a
/// witness when more than two chains are needed.
inline ChainPair width2_chains(const Dag& g) {
    const std::size_t n = g.size();
    auto reach = reachability(g);
    const std::size_t none = n;
    std::vector<std::size_t> match_right(n, none), match_left(n, none);
    std::vector<char> seen;
    auto augment = [&](auto&& self, std::size_t u) -> bool {
        for (auto v = reach[u].find_first(); v != Bits::npos; v = reach[u].find_next(v)) {
            if (seen[v]) {
                continue;
            }
            seen[v] = 1;
            if (match_right[v] == none || self(self, match_right[v])) {
                match_right[v] = u;
                match_left[u] = v;
                return true;
            }
        }
        return false;
    };
    std::size_t matched = 0;
    for (std::size_t u = 0; u < n; ++u) {
        seen.assign(n, 0);
        matched += augment(augment, u) ? 1 : 0;
    }
    if (n - matched > 2) {
        throw AntichainError(detail::find_antichain3(reach));
    }
    std::vector<std::vector<std::size_t>> chains;
    for (std::size_t v = 0; v < n; ++v) {
        if (match_right[v] != none) {
            continue;
        }
        std::vector<std::size_t> chain;
        for (std::size_t c = v; c != none; c = match_left[c]) {
            chain.push_back(c);
        }
        chains.push_back(std::move(chain));
    }
    ChainPair cp;
    if (!chains.empty()) {
        cp.a = chains[0];
    }
    if (chains.size() > 1) {
        cp.b = chains[1];
    }
    return cp;
}

/// Consecutive entries comparable, chains disjoint, every vertex covered.
inline bool is_valid_chain_pair(const Dag& g, const ChainPair& cp) {
    auto reach = reachability(g);
    std::vector<int> seen(g.size(), 0);
    for (const auto* chain : {&cp.a, &cp.b}) {
        for (std::size_t i = 0; i < chain->size(); ++i) {
            std::size_t v = (*chain)[i];
            if (v >= g.size() || seen[v]++) {
                return false;
            }
            if (i > 0 && !reach[(*chain)[i - 1]].test(v)) {
                return false;
            }
        }
    }
    return cp.a.size() + cp.b.size() == g.size();
}

/// x(v): 1-based position on chain a of the first element v reaches (or is);
/// y(v) the same over chain b. A vertex reaching nothing on a chain gets the
/// sentinel |chain| + 1 there. A single chain is drawn on the diagonal.
inline Drawing width2_drawing(const Dag& g) {
    ChainPair cp = width2_chains(g);
    auto reach = reachability(g);
    auto first_reached = [&](std::size_t v, const std::vector<std::size_t>& chain) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (chain[i] == v || reach[v].test(chain[i])) {
                return static_cast<std::int64_t>(i + 1);
            }
        }
        return static_cast<std::int64_t>(chain.size() + 1);
    };
    const auto& chain_b = cp.b.empty() ? cp.a : cp.b;
    Drawing d{g, {}};
    for (std::size_t v = 0; v < g.size(); ++v) {
        d.placement.push_back({Rational(first_reached(v, cp.a)), Rational(first_reached(v, chain_b)), std::nullopt,
                               g.label(v)});
    }
    return d;
}

} // namespace superpat
