#include <gtest/gtest.h>

#include <random>

#include <posetmorse/permutation.hpp>

#include "oracles.hpp"

using namespace posetmorse;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

Permutation random_permutation(std::mt19937& rng, std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(v);
}

}  // namespace

TEST(Permutation, RejectsNonPermutations) {
    EXPECT_THROW(Permutation(std::vector<int>{}), parse_error);
    EXPECT_THROW(Permutation(std::vector<int>{1, 1}), parse_error);
    EXPECT_THROW(Permutation(std::vector<int>{0, 1}), parse_error);
    EXPECT_THROW(Permutation(std::vector<int>{1, 3}), parse_error);
    EXPECT_THROW(parse_permutation("12a"), parse_error);
    EXPECT_THROW(parse_permutation(""), parse_error);
}

TEST(Permutation, TextFormSwitchesToCommasAboveNine) {
    EXPECT_EQ(to_string(P("213546")), "213546");
    auto ten = parse_permutation("2,1,3,4,5,6,7,8,9,10");
    EXPECT_EQ(ten.size(), 10u);
    EXPECT_EQ(to_string(ten), "2,1,3,4,5,6,7,8,9,10");
    EXPECT_EQ(parse_permutation("3,1,2"), P("312"));
}

TEST(Standardize, Examples) {
    EXPECT_EQ(standardize({5, 3, 4}), P("312"));
    EXPECT_EQ(standardize({5, 3, 4, 1}), P("4231"));
    EXPECT_EQ(standardize({7}), P("1"));
    EXPECT_EQ(standardize({1, 3, 5, 4}), P("1243"));
}

TEST(Standardize, Errors) {
    EXPECT_THROW(standardize(std::span<const int>{}), domain_error);
    EXPECT_THROW(standardize({3, 1, 3}), domain_error);
}

TEST(Standardize, IdempotentAndMatchesCountingOracle) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = 1 + rng() % 12;
        std::vector<int> s;
        std::uniform_int_distribution<int> d(-1000, 1000);
        while (s.size() < n) {
            int v = d(rng);
            if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
        }
        auto p = standardize(s);
        EXPECT_EQ(standardize(p.letters()), p);
        EXPECT_EQ(std::vector<int>(p.begin(), p.end()), oracle::standardize(s));
    }
}

TEST(Occurrences, Examples) {
    auto occ = occurrences(P("213"), P("213546"));
    ASSERT_EQ(occ.size(), 2u);
    EXPECT_EQ(to_string(occ[0]), "213000");
    EXPECT_EQ(to_string(occ[1]), "000213");
    EXPECT_EQ(occ[1].offset(), 3u);
    EXPECT_EQ(occ[1].block_length(), 3u);

    auto ones = occurrences(P("1"), P("21"));
    ASSERT_EQ(ones.size(), 2u);
    EXPECT_EQ(to_string(ones[0]), "10");
    EXPECT_EQ(to_string(ones[1]), "01");

    EXPECT_TRUE(occurrences(P("12"), P("21")).empty());
}

TEST(Occurrences, CountMatchesWindowScanExhaustively) {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& tau : all_permutations(n))
            for (std::size_t k = 1; k <= n; ++k)
                for (const auto& sigma : all_permutations(k)) {
                    auto occ = occurrences(sigma, tau);
                    auto win = oracle::windows(std::vector<int>(sigma.begin(), sigma.end()),
                                               std::vector<int>(tau.begin(), tau.end()));
                    ASSERT_EQ(occ.size(), win.size());
                    for (std::size_t i = 0; i < occ.size(); ++i) EXPECT_EQ(occ[i].offset(), win[i]);
                    EXPECT_EQ(leq_consecutive(sigma, tau), !win.empty());
                }
}

TEST(LeqConsecutive, Examples) {
    EXPECT_FALSE(leq_consecutive(P("213"), P("1243")));
    EXPECT_TRUE(leq_consecutive(P("213546"), P("213546")));
    EXPECT_TRUE(leq_consecutive(P("21"), P("21354")));
    EXPECT_FALSE(leq_consecutive(P("1243"), P("123")));
}

TEST(DownCovers, Examples) {
    auto c = down_covers(P("213546"));
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0], (Cover<Permutation>{P("21354"), 6}));
    EXPECT_EQ(c[1], (Cover<Permutation>{P("12435"), 1}));

    auto mono = down_covers(P("123"));
    ASSERT_EQ(mono.size(), 1u);
    EXPECT_EQ(mono[0], (Cover<Permutation>{P("12"), 1}));

    auto c231 = down_covers(P("231"));
    ASSERT_EQ(c231.size(), 2u);
    EXPECT_EQ(c231[0], (Cover<Permutation>{P("12"), 3}));
    EXPECT_EQ(c231[1], (Cover<Permutation>{P("21"), 1}));

    EXPECT_THROW(down_covers(P("1")), domain_error);
}

TEST(DownCovers, ChildrenCoincideExactlyForMonotone) {
    for (std::size_t n = 2; n <= 7; ++n)
        for (const auto& tau : all_permutations(n)) {
            auto pre = affix(tau, n - 1, Side::Prefix);
            auto suf = affix(tau, n - 1, Side::Suffix);
            EXPECT_EQ(pre == suf, is_monotone(tau)) << to_string(tau);
            if (pre == suf) EXPECT_TRUE(is_monotone(pre));
            EXPECT_EQ(down_covers(tau).size(), is_monotone(tau) ? 1u : 2u);
        }
}

TEST(Affix, Examples) {
    EXPECT_EQ(affix(P("53412"), 4, Side::Prefix), P("4231"));
    EXPECT_EQ(affix(P("53412"), 3, Side::Prefix), P("312"));
    EXPECT_EQ(affix(P("213546"), 3, Side::Suffix), P("213"));
    EXPECT_EQ(affix(P("213546"), 6, Side::Prefix), P("213546"));
    EXPECT_THROW(affix(P("213"), 0, Side::Prefix), domain_error);
    EXPECT_THROW(affix(P("213"), 4, Side::Suffix), domain_error);
}

TEST(Affix, NestedAffixesCompose) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        auto tau = random_permutation(rng, 1 + rng() % 10);
        std::size_t k1 = 1 + rng() % tau.size();
        std::size_t k2 = 1 + rng() % tau.size();
        for (auto side : {Side::Prefix, Side::Suffix}) {
            if (k1 <= k2)
                EXPECT_EQ(affix(affix(tau, k2, side), k1, side), affix(tau, k1, side));
            EXPECT_EQ(affix(affix(tau, std::max(k1, k2), side), std::min(k1, k2), side),
                      affix(tau, std::min(k1, k2), side));
        }
    }
}

TEST(Interior, Examples) {
    EXPECT_EQ(interior(P("21354")), P("123"));
    EXPECT_EQ(interior(P("213546")), P("1243"));
    EXPECT_EQ(interior(P("132")), P("1"));
    EXPECT_THROW(interior(P("21")), domain_error);
}

TEST(Exterior, Examples) {
    EXPECT_EQ(exterior(P("21354")), P("21"));
    EXPECT_EQ(exterior(P("213546")), P("213"));
    EXPECT_EQ(exterior(P("12")), P("1"));
    EXPECT_THROW(exterior(P("1")), domain_error);
}

TEST(Exterior, IsAShorterPattern) {
    for (std::size_t n = 2; n <= 7; ++n)
        for (const auto& tau : all_permutations(n)) {
            auto x = exterior(tau);
            EXPECT_LT(x.size(), tau.size());
            EXPECT_TRUE(leq_consecutive(x, tau));
            EXPECT_EQ(affix(tau, x.size(), Side::Prefix), x);
            EXPECT_EQ(affix(tau, x.size(), Side::Suffix), x);
        }
}

TEST(IsMonotone, Examples) {
    EXPECT_TRUE(is_monotone(P("123")));
    EXPECT_TRUE(is_monotone(P("4321")));
    EXPECT_FALSE(is_monotone(P("213")));
    EXPECT_TRUE(is_monotone(P("1")));
}
