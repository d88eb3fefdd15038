#pragma once

/**
 * @file chains.hpp
 * @brief Maximal chains with embeddings and chain ids.
 *
 * A maximal chain of [bottom, top] is walked from the top down. Each cover
 * reduces one position of the current element to 0, and that position is
 * recorded in the coordinates of the top element. The resulting label
 * sequence (the chain id) identifies the chain, and sorting chain ids
 * lexicographically gives the order used by the Morse machinery.
 */

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "poset.hpp"

namespace posetmorse {

template <class E>
struct MaximalChain {
    // elements[0] is the top, elements[n] the bottom.
    std::vector<E> elements;
    // offsets[i]: 0-based position in the top where the copy of elements[i] starts.
    std::vector<std::size_t> offsets;
    // labels[i - 1] is the label of the cover elements[i - 1] -> elements[i], 1-based.
    std::vector<std::size_t> labels;

    std::size_t length() const noexcept { return labels.size(); }
    const E& top() const { return elements.front(); }
    const E& bottom() const { return elements.back(); }

    friend bool operator==(const MaximalChain&, const MaximalChain&) = default;
};

enum class StepClass { Ascent, WeakDescent, StrongDescent };

inline const char* to_string(StepClass s) {
    switch (s) {
        case StepClass::Ascent: return "ascent";
        case StepClass::WeakDescent: return "weak-descent";
        case StepClass::StrongDescent: return "strong-descent";
    }
    return "?";
}

/// Expansion of elements[i] inside the top of a permutation chain.
inline Expansion embedding(const MaximalChain<Permutation>& c, std::size_t i) {
    Expansion e{std::vector<int>(c.top().size(), 0)};
    std::copy(c.elements[i].begin(), c.elements[i].end(),
              e.entries.begin() + static_cast<std::ptrdiff_t>(c.offsets[i]));
    return e;
}

namespace detail {

template <ChainPoset P>
void descend(const P& poset, const ElementOf<P>& bottom, MaximalChain<ElementOf<P>>& path,
             std::vector<MaximalChain<ElementOf<P>>>& out) {
    const auto& cur = path.elements.back();
    if (poset.rank(cur) == poset.rank(bottom)) {
        if (cur == bottom) out.push_back(path);
        return;
    }
    const std::size_t offset = path.offsets.back();
    for (auto& cover : poset.down_covers(cur)) {
        if (!poset.leq(bottom, cover.element)) continue;
        path.labels.push_back(offset + cover.zeroed_position);
        path.offsets.push_back(cover.zeroed_position == 1 ? offset + 1 : offset);
        path.elements.push_back(std::move(cover.element));
        descend(poset, bottom, path, out);
        path.elements.pop_back();
        path.offsets.pop_back();
        path.labels.pop_back();
    }
}

}  // namespace detail

/// All maximal chains of the interval, sorted by chain id.
template <ChainPoset P>
std::vector<MaximalChain<ElementOf<P>>> maximal_chains(const P& poset, const Interval<ElementOf<P>>& iv) {
    validate(poset, iv);
    std::vector<MaximalChain<ElementOf<P>>> out;
    MaximalChain<ElementOf<P>> path{{iv.top}, {0}, {}};
    detail::descend(poset, iv.bottom, path, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.labels < b.labels; });
    return out;
}

/// Class of each internal element rho_1 .. rho_{n-1}.
template <class E>
std::vector<StepClass> classify_steps(const MaximalChain<E>& c) {
    std::vector<StepClass> out;
    for (std::size_t i = 1; i < c.length(); ++i) {
        const auto here = c.labels[i - 1];
        const auto next = c.labels[i];
        if (here < next)
            out.push_back(StepClass::Ascent);
        else if (here == next + 1)
            out.push_back(StepClass::WeakDescent);
        else
            out.push_back(StepClass::StrongDescent);
    }
    return out;
}

inline std::string chain_id(const std::vector<std::size_t>& labels) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) out += '-';
        out += std::to_string(labels[i]);
    }
    return out;
}

/// Checks that `order` is a poset lexicographic order: whenever two chains
/// diverge after a common prefix, all chains extending the first branch sit
/// on the same side of all chains extending the second branch.
///
/// The chains must be distinct maximal chains of one interval; any duplicate
/// or mismatched endpoint makes the order invalid.
template <class E>
bool is_poset_lex(const std::vector<MaximalChain<E>>& order) {
    if (order.empty()) return true;
    const auto& first = order.front();
    for (const auto& c : order)
        if (c.top() != first.top() || c.bottom() != first.bottom() || c.length() != first.length())
            return false;

    // For every common prefix, the position span of each branch leaving it.
    using Prefix = std::vector<E>;
    struct Span {
        std::size_t lo, hi;
    };
    std::map<Prefix, std::map<E, Span>> branches;
    std::map<std::vector<E>, int> seen;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const auto& els = order[pos].elements;
        if (++seen[els] > 1) return false;
        for (std::size_t k = 1; k < els.size(); ++k) {
            Prefix prefix(els.begin(), els.begin() + static_cast<std::ptrdiff_t>(k));
            auto [it, inserted] = branches[prefix].try_emplace(els[k], Span{pos, pos});
            if (!inserted) {
                it->second.lo = std::min(it->second.lo, pos);
                it->second.hi = std::max(it->second.hi, pos);
            }
        }
    }
    for (const auto& [prefix, children] : branches) {
        std::vector<Span> spans;
        for (const auto& [child, span] : children) spans.push_back(span);
        std::sort(spans.begin(), spans.end(), [](Span a, Span b) { return a.lo < b.lo; });
        for (std::size_t i = 1; i < spans.size(); ++i)
            if (spans[i].lo < spans[i - 1].hi) return false;
    }
    return true;
}

}  // namespace posetmorse
