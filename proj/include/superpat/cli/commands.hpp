#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superpat/cli/io.hpp"
#include "superpat/cli/random.hpp"
#include "superpat/outerplanar/embed.hpp"
#include "superpat/perm/pattern.hpp"
#include "superpat/poset/embed.hpp"
#include "superpat/poset/tree.hpp"
#include "superpat/poset/width2.hpp"
#include "superpat/superpattern/mu.hpp"
#include "superpat/superpattern/riffle.hpp"

namespace superpat {

inline const std::vector<std::string>& instance_kinds() {
    static const std::vector<std::string> k{"perm321", "riffle", "tree", "width2", "stouter"};
    return k;
}

/// Seeded instance of the named class, serialized: permutations as one-line
/// text, posets and trees as Dag JSON, st-outerplanar graphs as their JSON.
/// Membership is checked before returning.
inline std::string random_instance(const std::string& kind, std::size_t n, std::uint64_t seed) {
    if (n < 1) {
        throw PreconditionError("random_instance: n must be at least 1");
    }
    Rng rng(seed);
    if (kind == "perm321") {
        Permutation p = random_321_avoider(n, rng);
        if (!avoids(p, Permutation({3, 2, 1}))) {
            throw InternalError("random_instance: generated permutation contains 321");
        }
        return format_permutation(p) + "\n";
    }
    if (kind == "riffle") {
        Permutation p = random_riffle(n, rng);
        if (!is_riffle(p)) {
            throw InternalError("random_instance: generated permutation is not a riffle");
        }
        return format_permutation(p) + "\n";
    }
    if (kind == "tree") {
        Dag t = random_tree(n, rng);
        (void)tree_root(t); // throws unless t is a directed tree
        return to_json(t).dump(2) + "\n";
    }
    if (kind == "width2") {
        Dag g = random_width2_dag(n, rng);
        (void)width2_chains(g); // throws on width >= 3
        return to_json(g).dump(2) + "\n";
    }
    if (kind == "stouter") {
        StOuterplanarGraph g = random_st_outerplanar(n, rng);
        if (auto v = validate(g); !v.ok) {
            throw InternalError("random_instance: generated graph is invalid: " + v.diagnostic);
        }
        return to_json(g).dump(2) + "\n";
    }
    throw PreconditionError("unknown instance kind '" + kind + "'");
}

inline const std::vector<std::string>& superpattern_families() {
    static const std::vector<std::string> f{"riffle", "antiriffle", "mu", "reduced-mu", "generic"};
    return f;
}

inline Permutation make_superpattern(const std::string& family, std::size_t n) {
    if (family == "riffle") {
        return riffle_superpattern(n);
    }
    if (family == "antiriffle") {
        return antiriffle_superpattern(n);
    }
    if (family == "mu") {
        return mu(n);
    }
    if (family == "reduced-mu") {
        return reduced_mu(n);
    }
    if (family == "generic") {
        return generic_superpattern(n);
    }
    throw PreconditionError("unknown superpattern family '" + family + "'");
}

inline const std::vector<std::string>& pointset_families() {
    static const std::vector<std::string> f{"combined-square", "quadset", "skew-riffle", "tree-universal"};
    return f;
}

/// Point-set families as JSON (the quadset keeps its square index).
inline Json make_pointset(const std::string& family, std::size_t n) {
    if (family == "combined-square") {
        return to_json(combined_square(n));
    }
    if (family == "quadset") {
        return to_json(build_Q(static_cast<int>(n)));
    }
    if (family == "skew-riffle") {
        return to_json(skew_riffle_superpattern(static_cast<int>(n)));
    }
    if (family == "tree-universal") {
        return to_json(tree_universal_pointset(n, n <= 1 ? Permutation() : generic_superpattern(n - 1)));
    }
    throw PreconditionError("unknown point-set family '" + family + "'");
}

/// Embeds a pattern into the family's superpattern of size parameter n with
/// the constructive embedder; positions are 0-based indices into the text.
inline Embedding embed_into_family(const std::string& family, const Permutation& p, std::size_t n) {
    if (family == "riffle") {
        return embed_riffle(p, n);
    }
    if (family == "antiriffle") {
        return embed_antiriffle(p, n);
    }
    if (family == "mu" || family == "reduced-mu") {
        bool reduced = family == "reduced-mu";
        GridEmbedding ge = embed_321(p, n, reduced);
        return to_embedding(CellIndex(reduced ? reduced_mu_board(n) : mu_board(n)), ge);
    }
    if (family == "generic") {
        auto e = contains_pattern(generic_superpattern(n), p);
        if (!e) {
            throw PreconditionError("pattern longer than n");
        }
        return *e;
    }
    throw PreconditionError("unknown superpattern family '" + family + "'");
}

/// Dominance drawing of a graph given as JSON: "width2" draws a width-2 Dag,
/// "tree" a directed tree, "stouter" an st-outerplanar graph on Q points.
inline Drawing embed_graph(const std::string& kind, const std::string& text) {
    if (kind == "width2") {
        return width2_drawing(parse_dag(text));
    }
    if (kind == "width2-mu") {
        Dag g = parse_dag(text);
        return embed_drawing_mu(width2_drawing(g), g.size());
    }
    if (kind == "tree") {
        return tree_drawing(parse_dag(text));
    }
    if (kind == "stouter") {
        return embed_st_outerplanar(parse_st_outerplanar(text));
    }
    throw PreconditionError("unknown graph kind '" + kind + "'");
}

} // namespace superpat
