#pragma once

/**
 * @file bijection.hpp
 * @brief Order isomorphism between {a,b}* under factor order and the
 *        permutations avoiding 213 and 231 (classical patterns) under
 *        consecutive containment.
 *
 * Reading a word left to right, `a` takes the smallest unused value and `b`
 * the largest; the last position receives the value left over. A permutation
 * avoids 213 and 231 exactly when each of its entries but the last is the
 * minimum or maximum of the values not yet used, which is the inverse map.
 */

#include <atomic>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "parallel.hpp"
#include "permutation.hpp"
#include "word.hpp"

namespace posetmorse {

inline constexpr Letter letter_a = 0;
inline constexpr Letter letter_b = 1;

/// Position (1-based) of the first entry that is neither the smallest nor the
/// largest unused value, if any.
inline std::optional<std::size_t> first_non_extremal(const Permutation& p) {
    std::size_t lo = 1;
    std::size_t hi = p.size();
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const auto v = static_cast<std::size_t>(p[i]);
        if (v == lo)
            ++lo;
        else if (v == hi)
            --hi;
        else
            return i + 1;
    }
    return std::nullopt;
}

inline bool avoids_213_231(const Permutation& p) { return !first_non_extremal(p).has_value(); }

inline Permutation word_to_perm(const Word& w) {
    const std::size_t n = w.size() + 1;
    std::vector<int> out;
    out.reserve(n);
    int lo = 1;
    int hi = static_cast<int>(n);
    for (Letter l : w) {
        if (l == letter_a)
            out.push_back(lo++);
        else if (l == letter_b)
            out.push_back(hi--);
        else
            throw domain_error("the bijection is defined on words over {a, b} only");
    }
    out.push_back(lo);
    return Permutation(std::move(out));
}

inline Word perm_to_word(const Permutation& p) {
    if (auto bad = first_non_extremal(p))
        throw domain_error(to_string(p) + " contains 213 or 231: entry at position " + std::to_string(*bad) +
                           " is neither the smallest nor the largest remaining value");
    std::vector<Letter> out;
    std::size_t lo = 1;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (static_cast<std::size_t>(p[i]) == lo) {
            out.push_back(letter_a);
            ++lo;
        } else {
            out.push_back(letter_b);
        }
    }
    return Word(std::move(out));
}

struct IsomorphismReport {
    std::size_t max_length = 0;  // n: permutations up to length n, words up to n - 1
    std::size_t pairs_checked = 0;
    // (u, w) pairs where u <= w and f(u) <= f(w) disagree.
    std::vector<std::pair<Word, Word>> counterexamples;
    // avoider_counts[m - 1]: avoiders of length m found among all of S_m.
    std::vector<std::uint64_t> avoider_counts;
    // Image of the words of length m - 1 equals the set of avoiders in S_m.
    bool images_match = true;

    bool pass() const {
        if (!counterexamples.empty() || !images_match) return false;
        for (std::size_t m = 1; m <= avoider_counts.size(); ++m)
            if (avoider_counts[m - 1] != (std::uint64_t{1} << (m - 1))) return false;
        return true;
    }
};

inline constexpr std::size_t isomorphism_cap = 8;

/// Exhaustive check of order preservation in both directions for all words of
/// length at most n - 1, plus the avoider census of S_1 .. S_n.
inline IsomorphismReport verify_isomorphism(std::size_t n, unsigned jobs = 0, bool force = false) {
    if (n < 2) throw domain_error("verify_isomorphism needs n >= 2");
    if (n > isomorphism_cap && !force)
        throw guardrail_error("verify_isomorphism is capped at n = " + std::to_string(isomorphism_cap));

    IsomorphismReport report;
    report.max_length = n;
    std::vector<Word> words;
    std::vector<Permutation> images;
    for (std::size_t len = 0; len + 1 <= n; ++len)
        for (auto& w : all_words(2, len)) {
            images.push_back(word_to_perm(w));
            words.push_back(std::move(w));
        }

    std::vector<std::vector<std::pair<Word, Word>>> bad(words.size());
    parallel_for(words.size(), jobs, [&](std::size_t a) {
        for (std::size_t b = 0; b < words.size(); ++b)
            if (is_factor(words[a], words[b]) != leq_consecutive(images[a], images[b]))
                bad[a].emplace_back(words[a], words[b]);
    });
    report.pairs_checked = words.size() * words.size();
    for (auto& v : bad)
        for (auto& pr : v) report.counterexamples.push_back(std::move(pr));

    for (std::size_t m = 1; m <= n; ++m) {
        std::set<Permutation> avoiders;
        for (auto& p : all_permutations(m))
            if (avoids_213_231(p)) avoiders.insert(std::move(p));
        report.avoider_counts.push_back(avoiders.size());
        std::set<Permutation> image;
        for (const auto& w : all_words(2, m - 1)) image.insert(word_to_perm(w));
        if (image != avoiders) report.images_match = false;
    }
    return report;
}

}  // namespace posetmorse
