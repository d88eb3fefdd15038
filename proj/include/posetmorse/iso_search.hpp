#pragma once

/**
 * @file iso_search.hpp
 * @brief Exploratory search for poset isomorphisms between pattern-poset
 *        intervals and factor-order intervals.
 *
 * Intervals are reduced to their Hasse diagrams. Candidates are bucketed by a
 * cheap invariant (rank profile and sorted degree pairs); within a bucket a
 * rank-by-rank backtracking matcher decides isomorphism.
 */

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "parallel.hpp"
#include "poset.hpp"

namespace posetmorse {

struct HasseDiagram {
    std::vector<std::size_t> rank;                 // relative to the bottom
    std::vector<std::vector<std::size_t>> down;    // covered elements
    std::vector<std::vector<std::size_t>> up;      // covering elements

    std::size_t size() const { return rank.size(); }

    std::string invariant() const {
        std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> profile;
        for (std::size_t v = 0; v < size(); ++v) profile.emplace_back(rank[v], down[v].size(), up[v].size());
        std::sort(profile.begin(), profile.end());
        std::string out = std::to_string(size());
        for (auto [r, d, u] : profile) out += ";" + std::to_string(r) + "," + std::to_string(d) + "," + std::to_string(u);
        return out;
    }
};

template <ChainPoset P>
HasseDiagram hasse_diagram(const P& poset, const Interval<ElementOf<P>>& iv) {
    auto elems = interval_elements(poset, iv);  // sorted by rank
    HasseDiagram h;
    const std::size_t base = poset.rank(iv.bottom);
    h.down.resize(elems.size());
    h.up.resize(elems.size());
    for (const auto& e : elems) h.rank.push_back(poset.rank(e) - base);
    for (std::size_t y = 0; y < elems.size(); ++y)
        for (std::size_t z = 0; z < y; ++z)
            if (h.rank[z] + 1 == h.rank[y] && poset.leq(elems[z], elems[y])) {
                h.down[y].push_back(z);
                h.up[z].push_back(y);
            }
    return h;
}

namespace detail {

inline bool extend_match(const HasseDiagram& a, const HasseDiagram& b, std::size_t v, std::vector<std::size_t>& image,
                         std::vector<bool>& used) {
    if (v == a.size()) return true;
    for (std::size_t cand = 0; cand < b.size(); ++cand) {
        if (used[cand] || b.rank[cand] != a.rank[v] || b.down[cand].size() != a.down[v].size() ||
            b.up[cand].size() != a.up[v].size())
            continue;
        // Down-neighbours have lower rank, so they are already mapped.
        bool ok = std::all_of(a.down[v].begin(), a.down[v].end(), [&](std::size_t d) {
            return std::find(b.down[cand].begin(), b.down[cand].end(), image[d]) != b.down[cand].end();
        });
        if (!ok) continue;
        image[v] = cand;
        used[cand] = true;
        if (extend_match(a, b, v + 1, image, used)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace detail

/// Poset isomorphism of two Hasse diagrams whose vertices are listed by rank.
inline bool isomorphic(const HasseDiagram& a, const HasseDiagram& b) {
    if (a.invariant() != b.invariant()) return false;
    std::vector<std::size_t> image(a.size(), 0);
    std::vector<bool> used(b.size(), false);
    return detail::extend_match(a, b, 0, image, used);
}

struct IsoMatch {
    std::string pattern_bottom, pattern_top;
    std::size_t size = 0;
    std::optional<std::pair<std::string, std::string>> word_interval;
};

struct IsoCatalog {
    std::size_t pattern_cap = 0;
    std::size_t word_cap = 0;
    std::string alphabet;
    std::vector<IsoMatch> entries;

    std::size_t matched() const {
        return static_cast<std::size_t>(
            std::count_if(entries.begin(), entries.end(), [](const IsoMatch& m) { return m.word_interval.has_value(); }));
    }
};

/// For each pattern interval with top of length <= pattern_cap, the first
/// factor-order interval (words of length <= word_cap) isomorphic to it.
inline IsoCatalog iso_search(std::size_t pattern_cap, std::size_t word_cap, const Alphabet& alphabet, unsigned jobs = 0,
                             bool force = false) {
    PatternPoset patterns{force};
    FactorOrder words{alphabet, force};
    if (!force && (pattern_cap > patterns.max_top_rank() || word_cap > words.max_top_rank()))
        throw guardrail_error("iso-search caps exceed the size guardrails");

    std::map<std::string, std::vector<std::pair<Interval<Word>, HasseDiagram>>> buckets;
    std::vector<Word> tops;
    for (std::size_t n = 0; n <= word_cap; ++n)
        for (auto& w : all_words(alphabet.size(), n)) tops.push_back(std::move(w));
    for (auto& iv : all_intervals(words, tops)) {
        auto h = hasse_diagram(words, iv);
        buckets[h.invariant()].emplace_back(std::move(iv), std::move(h));
    }

    IsoCatalog cat{pattern_cap, word_cap, {}, {}};
    for (const auto& s : alphabet.symbols()) cat.alphabet += (cat.alphabet.empty() ? "" : ",") + s;
    auto intervals = all_pattern_intervals(pattern_cap);
    cat.entries.resize(intervals.size());
    parallel_for(intervals.size(), jobs, [&](std::size_t i) {
        const auto& iv = intervals[i];
        auto h = hasse_diagram(patterns, iv);
        IsoMatch m{patterns.format(iv.bottom), patterns.format(iv.top), h.size(), std::nullopt};
        if (auto it = buckets.find(h.invariant()); it != buckets.end())
            for (const auto& [wiv, wh] : it->second)
                if (isomorphic(h, wh)) {
                    m.word_interval = {words.format(wiv.bottom), words.format(wiv.top)};
                    break;
                }
        cat.entries[i] = std::move(m);
    });
    return cat;
}

inline nlohmann::json to_json(const IsoCatalog& cat) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& m : cat.entries) {
        nlohmann::json e{{"bottom", m.pattern_bottom}, {"top", m.pattern_top}, {"size", m.size}};
        if (m.word_interval)
            e["match"] = {{"bottom", m.word_interval->first}, {"top", m.word_interval->second}};
        else
            e["match"] = nullptr;
        entries.push_back(std::move(e));
    }
    return {{"pattern_cap", cat.pattern_cap},
            {"word_cap", cat.word_cap},
            {"alphabet", cat.alphabet},
            {"intervals", cat.entries.size()},
            {"matched", cat.matched()},
            {"entries", std::move(entries)}};
}

}  // namespace posetmorse
