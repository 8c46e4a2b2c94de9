#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "superpat/perm/pattern.hpp"
#include "test_oracles.hpp"

using namespace superpat;

TEST(Permutation, RejectsNonPermutations) {
    EXPECT_THROW(Permutation({1, 1}), PreconditionError);
    EXPECT_THROW(Permutation({0, 1}), PreconditionError);
    EXPECT_THROW(Permutation({3, 1}), PreconditionError);
    EXPECT_NO_THROW(Permutation(std::vector<int>{}));
}

TEST(Permutation, ParseAndFormat) {
    EXPECT_EQ(parse_permutation("4 1 5 2 6 3"), Permutation({4, 1, 5, 2, 6, 3}));
    EXPECT_EQ(parse_permutation("2143"), Permutation({2, 1, 4, 3}));
    EXPECT_EQ(format_permutation(Permutation({3, 1, 2})), "3 1 2");
    EXPECT_THROW(parse_permutation("1 x 2"), ParseError);
    EXPECT_THROW(parse_permutation("1 1"), ParseError);
}

TEST(Inverse, Examples) {
    EXPECT_EQ(inverse(Permutation({3, 1, 2})), Permutation({2, 3, 1}));
    EXPECT_EQ(inverse(Permutation({1, 2, 3})), Permutation({1, 2, 3}));
    // 41526 is not a permutation; its pattern is 31425.
    std::vector<int> raw{4, 1, 5, 2, 6};
    EXPECT_THROW(Permutation{raw}, PreconditionError);
    EXPECT_EQ(inverse(Permutation::from_ranks(raw)), Permutation({2, 4, 1, 3, 5}));
}

TEST(Inverse, Involution) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        auto p = oracle::random_permutation(1 + rng() % 40, rng);
        EXPECT_EQ(inverse(inverse(p)), p);
    }
}

TEST(ContainsPattern, Examples) {
    Permutation text({1, 4, 8, 7, 3, 5, 2, 6});
    auto e = contains_pattern(text, Permutation({3, 2, 1}));
    ASSERT_TRUE(e);
    EXPECT_TRUE(is_valid_embedding(text, Permutation({3, 2, 1}), *e));
    EXPECT_TRUE(oracle::brute_force_contains(text, Permutation({3, 2, 1})));

    EXPECT_FALSE(contains_pattern(Permutation({1, 2, 3}), Permutation({2, 1})));

    auto id = contains_pattern(Permutation({2, 1, 4, 3}), Permutation({2, 1, 4, 3}));
    ASSERT_TRUE(id);
    EXPECT_EQ(id->positions, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(ContainsPattern, AgreesWithBruteForce) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 400; ++t) {
        auto text = oracle::random_permutation(1 + rng() % 9, rng);
        auto pat = oracle::random_permutation(1 + rng() % 4, rng);
        auto e = contains_pattern(text, pat);
        EXPECT_EQ(e.has_value(), oracle::brute_force_contains(text, pat));
        if (e) {
            EXPECT_TRUE(is_valid_embedding(text, pat, *e));
        }
    }
}

TEST(ContainsPattern, SelfIsIdentity) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto p = oracle::random_permutation(1 + rng() % 30, rng);
        auto e = contains_pattern(p, p);
        ASSERT_TRUE(e);
        for (std::size_t i = 0; i < p.size(); ++i) {
            EXPECT_EQ(e->positions[i], i);
        }
    }
}

TEST(ContainsPattern, TransitiveAndInverseInvariant) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        auto a = oracle::random_permutation(4 + rng() % 8, rng);
        auto b = oracle::random_permutation(2 + rng() % 4, rng);
        auto c = oracle::random_permutation(1 + rng() % 3, rng);
        bool ab = contains_pattern(a, b).has_value();
        bool bc = contains_pattern(b, c).has_value();
        if (ab && bc) {
            EXPECT_TRUE(contains_pattern(a, c));
        }
        EXPECT_EQ(ab, contains_pattern(inverse(a), inverse(b)).has_value());
    }
}

TEST(ValidEmbedding, RejectsBadWitnesses) {
    Permutation text({2, 1, 3});
    Permutation pat({1, 2});
    EXPECT_TRUE(is_valid_embedding(text, pat, Embedding{{0, 2}}));
    EXPECT_FALSE(is_valid_embedding(text, pat, Embedding{{0, 1}}));
    EXPECT_FALSE(is_valid_embedding(text, pat, Embedding{{2, 0}}));
    EXPECT_FALSE(is_valid_embedding(text, pat, Embedding{{0, 0}}));
    EXPECT_FALSE(is_valid_embedding(text, pat, Embedding{{0, 5}}));
    EXPECT_FALSE(is_valid_embedding(text, pat, Embedding{{0}}));
}

TEST(EnumerateAvoiders, Examples) {
    auto s3 = enumerate_avoiders(3, {Permutation({3, 2, 1})});
    std::vector<Permutation> expect{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}};
    EXPECT_EQ(s3, expect);

    auto s1 = enumerate_avoiders(1, {Permutation({3, 2, 1})});
    ASSERT_EQ(s1.size(), 1u);
    EXPECT_EQ(s1[0], Permutation({1}));

    auto r4 = enumerate_avoiders(4, oracle::riffle_basis());
    EXPECT_EQ(r4.size(), 12u);
    EXPECT_TRUE(std::is_sorted(r4.begin(), r4.end()));
}

TEST(EnumerateAvoiders, MatchesFilteredBruteForce) {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& basis : {std::vector<Permutation>{{3, 2, 1}}, oracle::riffle_basis(),
                                  std::vector<Permutation>{{2, 1, 3}}}) {
            auto fast = enumerate_avoiders(n, basis);
            auto slow = oracle::brute_force_avoiders(n, basis);
            EXPECT_EQ(fast, slow) << "n=" << n;
        }
    }
}

TEST(EnumerateAvoiders, CatalanAndRiffleCounts) {
    for (std::size_t n = 1; n <= 10; ++n) {
        EXPECT_EQ(enumerate_avoiders(n, {Permutation({3, 2, 1})}).size(), oracle::catalan(n)) << n;
    }
    for (std::size_t n = 2; n <= 10; ++n) {
        EXPECT_EQ(enumerate_avoiders(n, oracle::riffle_basis()).size(), (std::size_t{1} << n) - n) << n;
    }
}

TEST(EnumerateAvoiders, GuardRefuses) {
    EXPECT_THROW(enumerate_avoiders(12, {Permutation({1})}), SizeGuardError);
    EXPECT_NO_THROW(enumerate_avoiders(12, {Permutation({1, 2})}, 12));
}

TEST(SkewSum, PlacesSecondAboveRight) {
    EXPECT_EQ(skew_sum(Permutation({2, 1}), Permutation({1, 2})), Permutation({2, 1, 3, 4}));
    EXPECT_EQ(skew_sum(Permutation({1}), Permutation({1})), Permutation({1, 2}));
}
