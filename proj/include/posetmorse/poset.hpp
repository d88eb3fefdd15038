#pragma once

/**
 * @file poset.hpp
 * @brief Common interface over the two graded posets, and ground-truth oracles.
 *
 * Both the consecutive pattern poset and factor order are graded by length and
 * every element covers at most two others. The ChainPoset concept captures
 * exactly what the chain and Morse machinery needs from a poset; the oracles
 * here (interval enumeration, Möbius recursion, order-complex Euler
 * characteristic) use only rank, covers and the order relation.
 */

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"
#include "word.hpp"

namespace posetmorse {

template <class P>
concept ChainPoset = requires(const P& p, const typename P::element_type& e) {
    typename P::element_type;
    { p.rank(e) } -> std::convertible_to<std::size_t>;
    { p.down_covers(e) } -> std::same_as<std::vector<Cover<typename P::element_type>>>;
    { p.leq(e, e) } -> std::same_as<bool>;
    { p.format(e) } -> std::convertible_to<std::string>;
    { p.parse(std::string_view{}) } -> std::same_as<typename P::element_type>;
    { p.tag() } -> std::convertible_to<std::string_view>;
    { p.max_top_rank() } -> std::convertible_to<std::size_t>;
    { p.force() } -> std::convertible_to<bool>;
};

template <class E>
struct Interval {
    E bottom;
    E top;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Permutations ordered by consecutive pattern containment.
class PatternPoset {
public:
    using element_type = Permutation;
    static constexpr std::size_t default_cap = 9;

    explicit PatternPoset(bool force = false, std::size_t cap = default_cap) : cap_(cap), force_(force) {}

    std::size_t rank(const Permutation& p) const { return p.size(); }
    std::vector<Cover<Permutation>> down_covers(const Permutation& p) const {
        if (p.size() < 2) return {};
        return posetmorse::down_covers(p);
    }
    bool leq(const Permutation& a, const Permutation& b) const { return leq_consecutive(a, b); }
    std::string format(const Permutation& p) const { return to_string(p); }
    Permutation parse(std::string_view text) const { return parse_permutation(text); }
    std::string_view tag() const { return "pattern"; }
    std::size_t max_top_rank() const { return cap_; }
    bool force() const { return force_; }

private:
    std::size_t cap_;
    bool force_;
};

/// Words over a declared alphabet ordered by factor containment. The empty
/// word is the bottom element.
class FactorOrder {
public:
    using element_type = Word;
    static constexpr std::size_t default_cap = 12;

    explicit FactorOrder(Alphabet alphabet = Alphabet{}, bool force = false, std::size_t cap = default_cap)
        : alphabet_(std::move(alphabet)), cap_(cap), force_(force) {}

    std::size_t rank(const Word& w) const { return w.size(); }
    std::vector<Cover<Word>> down_covers(const Word& w) const {
        if (w.empty()) return {};
        return down_covers_word(w);
    }
    bool leq(const Word& a, const Word& b) const { return is_factor(a, b); }
    std::string format(const Word& w) const { return alphabet_.format(w); }
    Word parse(std::string_view text) const { return alphabet_.parse_word(text); }
    std::string_view tag() const { return "factor"; }
    std::size_t max_top_rank() const { return cap_; }
    bool force() const { return force_; }
    const Alphabet& alphabet() const { return alphabet_; }

private:
    Alphabet alphabet_;
    std::size_t cap_;
    bool force_;
};

template <ChainPoset P>
using ElementOf = typename P::element_type;

/// Throws incomparable_error unless bottom <= top, guardrail_error when the
/// top exceeds the poset's size cap and the poset was not built with force.
template <ChainPoset P>
void validate(const P& poset, const Interval<ElementOf<P>>& iv) {
    if (poset.rank(iv.top) > poset.max_top_rank() && !poset.force())
        throw guardrail_error("top element " + poset.format(iv.top) + " exceeds the size cap of " +
                              std::to_string(poset.max_top_rank()) + " (pass force to override)");
    if (!poset.leq(iv.bottom, iv.top))
        throw incomparable_error(poset.format(iv.bottom) + " is not below " + poset.format(iv.top));
}

/// Every element below top, ordered by rank then by element order.
template <ChainPoset P>
std::vector<ElementOf<P>> down_set(const P& poset, const ElementOf<P>& top) {
    using E = ElementOf<P>;
    std::set<E> seen{top};
    std::vector<E> frontier{top};
    while (!frontier.empty()) {
        std::vector<E> next;
        for (const auto& e : frontier)
            for (auto& c : poset.down_covers(e))
                if (seen.insert(c.element).second) next.push_back(std::move(c.element));
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

/// The closed interval [bottom, top], ordered by rank then element order.
template <ChainPoset P>
std::vector<ElementOf<P>> interval_elements(const P& poset, const Interval<ElementOf<P>>& iv) {
    validate(poset, iv);
    auto below = down_set(poset, iv.top);
    std::erase_if(below, [&](const auto& z) { return !poset.leq(iv.bottom, z); });
    return below;
}

/// Möbius function by the defining recursion over the closed interval.
/// Returns mu(bottom, z) for every z of the interval.
template <ChainPoset P>
std::map<ElementOf<P>, std::int64_t> mobius_table(const P& poset, const Interval<ElementOf<P>>& iv) {
    auto elems = interval_elements(poset, iv);
    std::map<ElementOf<P>, std::int64_t> mu;
    for (const auto& y : elems) {
        if (y == iv.bottom) {
            mu[y] = 1;
            continue;
        }
        std::int64_t sum = 0;
        for (const auto& [z, value] : mu)
            if (poset.rank(z) < poset.rank(y) && poset.leq(z, y)) sum += value;
        mu[y] = -sum;
    }
    return mu;
}

template <ChainPoset P>
std::int64_t mobius_bruteforce(const P& poset, const Interval<ElementOf<P>>& iv) {
    return mobius_table(poset, iv).at(iv.top);
}

struct ReducedEuler {
    std::int64_t value;
    // Set when the open interval is empty (rank gap 1): the empty complex.
    bool degenerate;
};

/// Reduced Euler characteristic of the order complex of the open interval,
/// computed by counting chains of the open interval by size.
template <ChainPoset P>
ReducedEuler euler_characteristic(const P& poset, const Interval<ElementOf<P>>& iv) {
    validate(poset, iv);
    const std::size_t gap = poset.rank(iv.top) - poset.rank(iv.bottom);
    if (gap == 0) throw domain_error("the order complex of [x, x] is undefined");
    if (gap == 1) return {-1, true};

    auto elems = interval_elements(poset, iv);
    std::vector<ElementOf<P>> open;
    for (auto& e : elems)
        if (e != iv.bottom && e != iv.top) open.push_back(std::move(e));

    // chains[z][k]: number of chains with k+1 elements whose largest element is z.
    const std::size_t m = open.size();
    std::vector<std::vector<std::int64_t>> chains(m, std::vector<std::int64_t>(gap, 0));
    for (std::size_t y = 0; y < m; ++y) {
        chains[y][0] = 1;
        for (std::size_t z = 0; z < y; ++z) {
            if (poset.rank(open[z]) >= poset.rank(open[y]) || !poset.leq(open[z], open[y])) continue;
            for (std::size_t k = 1; k < gap; ++k) chains[y][k] += chains[z][k - 1];
        }
    }
    std::int64_t chi = -1;
    for (std::size_t y = 0; y < m; ++y)
        for (std::size_t k = 0; k < gap; ++k) chi += (k % 2 == 0 ? 1 : -1) * chains[y][k];
    return {chi, false};
}

/// Every interval whose top has rank at most max_rank, with the given tops.
template <ChainPoset P>
std::vector<Interval<ElementOf<P>>> all_intervals(const P& poset, const std::vector<ElementOf<P>>& tops) {
    std::vector<Interval<ElementOf<P>>> out;
    for (const auto& top : tops)
        for (auto& bottom : down_set(poset, top)) out.push_back({std::move(bottom), top});
    return out;
}

inline std::vector<Interval<Permutation>> all_pattern_intervals(std::size_t max_top) {
    std::vector<Permutation> tops;
    for (std::size_t n = 1; n <= max_top; ++n)
        for (auto& p : all_permutations(n)) tops.push_back(std::move(p));
    return all_intervals(PatternPoset{true}, tops);
}

inline std::vector<Interval<Word>> all_word_intervals(std::size_t alphabet_size, std::size_t max_top) {
    std::vector<Word> tops;
    for (std::size_t n = 0; n <= max_top; ++n)
        for (auto& w : all_words(alphabet_size, n)) tops.push_back(std::move(w));
    return all_intervals(FactorOrder{Alphabet::first_letters(alphabet_size), true}, tops);
}

}  // namespace posetmorse
