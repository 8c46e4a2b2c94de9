#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "superpat/error.hpp"

namespace superpat {

using Edge = std::pair<std::size_t, std::size_t>;

/// Directed acyclic graph on vertices 0..n-1, each with a string label.
/// Duplicate edges collapse; self-loops and cycles are rejected.
class Dag {
public:
    Dag() = default;

    Dag(std::vector<std::string> labels, const std::vector<Edge>& edges) : labels_(std::move(labels)) {
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (!index_.emplace(labels_[i], i).second) {
                throw PreconditionError("duplicate vertex label '" + labels_[i] + "'");
            }
        }
        out_.resize(labels_.size());
        in_.resize(labels_.size());
        for (auto [u, v] : edges) {
            if (u >= size() || v >= size()) {
                throw PreconditionError("edge endpoint out of range");
            }
            if (u == v) {
                throw PreconditionError("self-loop at '" + labels_[u] + "'");
            }
            if (std::find(out_[u].begin(), out_[u].end(), v) == out_[u].end()) {
                out_[u].push_back(v);
                in_[v].push_back(u);
            }
        }
        topo_ = compute_topological_order();
    }

    /// Vertices labelled "0".."n-1".
    static Dag unlabelled(std::size_t n, const std::vector<Edge>& edges) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) {
            labels.push_back(std::to_string(i));
        }
        return Dag(std::move(labels), edges);
    }

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t v) const { return labels_.at(v); }
    /// Successors in input order.
    const std::vector<std::size_t>& out(std::size_t v) const { return out_.at(v); }
    const std::vector<std::size_t>& in(std::size_t v) const { return in_.at(v); }
    const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

    std::size_t index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) {
            throw PreconditionError("unknown vertex '" + label + "'");
        }
        return it->second;
    }

    /// All edges, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> e;
        for (std::size_t u = 0; u < size(); ++u) {
            for (auto v : out_[u]) {
                e.emplace_back(u, v);
            }
        }
        std::sort(e.begin(), e.end());
        return e;
    }

    std::size_t edge_count() const {
        std::size_t c = 0;
        for (const auto& o : out_) {
            c += o.size();
        }
        return c;
    }

private:
    std::vector<std::size_t> compute_topological_order() const {
        std::vector<std::size_t> indeg(size()), order;
        for (std::size_t v = 0; v < size(); ++v) {
            indeg[v] = in_[v].size();
        }
        std::vector<std::size_t> ready;
        for (std::size_t v = size(); v-- > 0;) {
            if (indeg[v] == 0) {
                ready.push_back(v);
            }
        }
        while (!ready.empty()) {
            std::size_t v = ready.back();
            ready.pop_back();
            order.push_back(v);
            for (auto w : out_[v]) {
                if (--indeg[w] == 0) {
                    ready.push_back(w);
                }
            }
        }
        if (order.size() != size()) {
            throw PreconditionError("graph has a directed cycle");
        }
        return order;
    }

    std::vector<std::string> labels_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
    std::vector<std::size_t> topo_;
};

using Bits = boost::dynamic_bitset<>;

/// reach[u][v] set iff there is a nonempty path u -> v.
inline std::vector<Bits> reachability(const Dag& g) {
    std::vector<Bits> reach(g.size(), Bits(g.size()));
    const auto& topo = g.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        for (auto w : g.out(*it)) {
            reach[*it].set(w);
            reach[*it] |= reach[w];
        }
    }
    return reach;
}

inline Dag transitive_closure(const Dag& g) {
    auto reach = reachability(g);
    std::vector<Edge> e;
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (auto v = reach[u].find_first(); v != Bits::npos; v = reach[u].find_next(v)) {
            e.emplace_back(u, v);
        }
    }
    return Dag(g.labels(), e);
}

/// Keeps u -> v only when no other successor of u reaches v.
inline Dag transitive_reduction(const Dag& g) {
    auto reach = reachability(g);
    std::vector<Edge> e;
    for (std::size_t u = 0; u < g.size(); ++u) {
        Bits via(g.size());
        for (auto w : g.out(u)) {
            via |= reach[w];
        }
        for (auto v = reach[u].find_first(); v != Bits::npos; v = reach[u].find_next(v)) {
            if (!via.test(v)) {
                e.emplace_back(u, v);
            }
        }
    }
    return Dag(g.labels(), e);
}

inline bool is_transitively_reduced(const Dag& g) { return transitive_reduction(g).edge_count() == g.edge_count(); }

} // namespace superpat
