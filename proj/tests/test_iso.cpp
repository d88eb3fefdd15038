#include <gtest/gtest.h>

#include <posetmorse/iso_search.hpp>

using namespace posetmorse;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

}  // namespace

TEST(Iso, HasseDiagramOfSmallInterval) {
    auto h = hasse_diagram(PatternPoset{}, Interval<Permutation>{P("123"), P("21354")});
    EXPECT_EQ(h.size(), 4u);
    FactorOrder words{Alphabet::parse("ab")};
    // [a, aba] = {a, ab, ba, aba}.
    auto w = hasse_diagram(words, Interval<Word>{words.parse("a"), words.parse("aba")});
    EXPECT_EQ(w.size(), 4u);
    EXPECT_TRUE(isomorphic(h, w));
    EXPECT_EQ(h.invariant(), w.invariant());
}

TEST(Iso, NonIsomorphicIntervals) {
    FactorOrder words{Alphabet::parse("ab")};
    auto square = hasse_diagram(words, Interval<Word>{words.parse("a"), words.parse("aba")});
    auto chain = hasse_diagram(words, Interval<Word>{words.parse("a"), words.parse("aaa")});
    EXPECT_EQ(chain.size(), 3u);
    EXPECT_FALSE(isomorphic(square, chain));
    auto big = hasse_diagram(PatternPoset{}, Interval<Permutation>{P("1"), P("213546")});
    EXPECT_FALSE(isomorphic(big, square));
}

TEST(Iso, PointIntervalsMatch) {
    auto point = hasse_diagram(PatternPoset{}, Interval<Permutation>{P("213"), P("213")});
    FactorOrder words{Alphabet::parse("ab")};
    EXPECT_TRUE(isomorphic(point, hasse_diagram(words, Interval<Word>{Word{}, Word{}})));
}

TEST(Iso, CatalogCoversSmallPatternIntervals) {
    auto cat = iso_search(3, 3, Alphabet::parse("ab"), 1);
    EXPECT_EQ(cat.entries.size(), all_pattern_intervals(3).size());
    EXPECT_EQ(cat.matched(), cat.entries.size());
    auto j = to_json(cat);
    EXPECT_EQ(j["entries"].size(), cat.entries.size());
}
