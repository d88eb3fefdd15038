#include <gtest/gtest.h>

#include <random>
#include <set>

#include <posetmorse/chains.hpp>

#include "oracles.hpp"

using namespace posetmorse;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

std::vector<std::string> ids(const std::vector<MaximalChain<Permutation>>& chains) {
    std::vector<std::string> out;
    for (const auto& c : chains) out.push_back(chain_id(c.labels));
    return out;
}

}  // namespace

TEST(MaximalChains, TableIntervalIds) {
    PatternPoset poset;
    auto chains = maximal_chains(poset, Interval<Permutation>{P("1"), P("213546")});
    ASSERT_EQ(chains.size(), 13u);
    EXPECT_EQ(ids(chains),
              (std::vector<std::string>{"1-2-3-4-5", "1-2-3-6-4", "1-2-6-3-4", "1-2-6-5-3", "1-6-2-3-4",
                                        "1-6-2-5-3", "1-6-5-2-3", "6-1-2-3-4", "6-1-2-5-3", "6-1-5-2-3",
                                        "6-5-1-2-3", "6-5-4-1-2", "6-5-4-3-1"}));
    EXPECT_EQ(chains.front().top(), P("213546"));
    EXPECT_EQ(chains.front().bottom(), P("1"));
}

TEST(MaximalChains, SmallExamples) {
    PatternPoset poset;
    EXPECT_EQ(ids(maximal_chains(poset, Interval<Permutation>{P("123"), P("21354")})),
              (std::vector<std::string>{"1-5", "5-1"}));
    EXPECT_EQ(maximal_chains(poset, Interval<Permutation>{P("1"), P("2134")}).size(), 3u);
    auto point = maximal_chains(poset, Interval<Permutation>{P("21"), P("21")});
    ASSERT_EQ(point.size(), 1u);
    EXPECT_EQ(point[0].length(), 0u);
}

TEST(MaximalChains, EmbeddingsFollowOffsets) {
    PatternPoset poset;
    auto chains = maximal_chains(poset, Interval<Permutation>{P("1"), P("213546")});
    const auto& c = chains.front();
    EXPECT_EQ(to_string(embedding(c, 0)), "213546");
    EXPECT_EQ(to_string(embedding(c, 3)), "000213");
    EXPECT_EQ(to_string(embedding(c, 5)), "000001");
}

TEST(MaximalChains, CountMatchesOracleAndLabelsAreValid) {
    PatternPoset poset;
    for (const auto& iv : all_pattern_intervals(6)) {
        auto chains = maximal_chains(poset, iv);
        auto elems = oracle::closed_interval(std::vector<int>(iv.bottom.begin(), iv.bottom.end()),
                                             std::vector<int>(iv.top.begin(), iv.top.end()));
        std::vector<int> b(iv.bottom.begin(), iv.bottom.end()), t(iv.top.begin(), iv.top.end());
        ASSERT_EQ(chains.size(), oracle::count_maximal_chains(elems, b, t)) << poset.format(iv.top);
        std::set<std::vector<std::size_t>> seen;
        for (const auto& c : chains) {
            EXPECT_TRUE(seen.insert(c.labels).second);
            EXPECT_EQ(c.length(), iv.top.size() - iv.bottom.size());
            std::set<std::size_t> distinct(c.labels.begin(), c.labels.end());
            EXPECT_EQ(distinct.size(), c.labels.size());
            for (auto l : c.labels) {
                EXPECT_GE(l, 1u);
                EXPECT_LE(l, iv.top.size());
            }
        }
    }
}

TEST(MaximalChains, WordChainCountsMatchOracle) {
    FactorOrder poset{Alphabet::parse("ab")};
    auto plain = [&](const Word& w) { return w.empty() ? std::string{} : poset.format(w); };
    for (const auto& iv : all_word_intervals(2, 6)) {
        auto chains = maximal_chains(poset, iv);
        auto elems = oracle::closed_interval(plain(iv.bottom), plain(iv.top), "ab");
        ASSERT_EQ(chains.size(), oracle::count_maximal_chains(elems, plain(iv.bottom), plain(iv.top)));
        EXPECT_TRUE(is_poset_lex(chains));
    }
}

TEST(ClassifySteps, Examples) {
    PatternPoset poset;
    auto chains = maximal_chains(poset, Interval<Permutation>{P("1"), P("213546")});
    ASSERT_EQ(chain_id(chains[10].labels), "6-5-1-2-3");
    auto steps = classify_steps(chains[10]);
    ASSERT_EQ(steps.size(), 4u);
    EXPECT_EQ(steps[0], StepClass::WeakDescent);
    EXPECT_EQ(steps[1], StepClass::StrongDescent);
    EXPECT_EQ(steps[2], StepClass::Ascent);
    EXPECT_EQ(steps[3], StepClass::Ascent);
}

TEST(PosetLex, ChainIdOrderIsPosetLexicographic) {
    PatternPoset poset;
    for (const auto& iv : all_pattern_intervals(6)) ASSERT_TRUE(is_poset_lex(maximal_chains(poset, iv)));
}

TEST(PosetLex, ShuffledOrderIsRejected) {
    PatternPoset poset;
    auto chains = maximal_chains(poset, Interval<Permutation>{P("1"), P("213546")});
    // Interleave the 1-... and 6-... families.
    auto bad = chains;
    std::swap(bad[1], bad[8]);
    EXPECT_FALSE(is_poset_lex(bad));

    std::mt19937 rng(3);
    int rejected = 0;
    for (int trial = 0; trial < 50; ++trial) {
        auto shuffled = chains;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        if (!is_poset_lex(shuffled)) ++rejected;
    }
    EXPECT_GT(rejected, 40);

    auto dup = chains;
    dup.push_back(chains.front());
    EXPECT_FALSE(is_poset_lex(dup));
}
