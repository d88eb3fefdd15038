#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations under consecutive pattern containment.
 *
 * A permutation of length n is stored in one-line notation with values 1..n.
 * Positions in the public API are 1-based, matching one-line notation, while
 * indexing through operator[] is 0-based like any container.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace posetmorse {

class Permutation {
public:
    Permutation() : letters_{1} {}

    // Throws parse_error unless letters is a bijection onto 1..n, n >= 1.
    explicit Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
        if (letters_.empty()) throw parse_error("permutation must have at least one letter");
        std::vector<bool> seen(letters_.size() + 1, false);
        for (int v : letters_) {
            if (v < 1 || static_cast<std::size_t>(v) > letters_.size() || seen[v])
                throw parse_error("not a permutation of 1.." + std::to_string(letters_.size()));
            seen[v] = true;
        }
    }

    std::size_t size() const noexcept { return letters_.size(); }
    int operator[](std::size_t i) const { return letters_[i]; }
    std::span<const int> letters() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.letters_ <=> b.letters_;
    }

private:
    struct unchecked_tag {};
    Permutation(std::vector<int> letters, unchecked_tag) : letters_(std::move(letters)) {}

    friend Permutation standardize(std::span<const int> s);

    std::vector<int> letters_;
};

enum class Side { Prefix, Suffix };

/// An expansion 0..0 sigma 0..0: a copy of a permutation placed inside a longer
/// row of positions, with every other position reduced to 0.
struct Expansion {
    std::vector<int> entries;

    std::size_t size() const noexcept { return entries.size(); }

    // 0-based index of the first nonzero entry; size() when all entries are zero.
    std::size_t offset() const {
        auto it = std::find_if(entries.begin(), entries.end(), [](int v) { return v != 0; });
        return static_cast<std::size_t>(it - entries.begin());
    }

    std::size_t block_length() const {
        return static_cast<std::size_t>(
            std::count_if(entries.begin(), entries.end(), [](int v) { return v != 0; }));
    }

    friend bool operator==(const Expansion&, const Expansion&) = default;
};

/// A covered element together with the position (1-based, in the coordinates
/// of the covering element) that is reduced to 0 to obtain it.
template <class E>
struct Cover {
    E element;
    std::size_t zeroed_position;

    friend bool operator==(const Cover&, const Cover&) = default;
};

/// The permutation order-isomorphic to s.
inline Permutation standardize(std::span<const int> s) {
    if (s.empty()) throw domain_error("cannot standardize an empty sequence");
    std::vector<std::size_t> order(s.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });
    std::vector<int> out(s.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        if (rank > 0 && s[order[rank]] == s[order[rank - 1]])
            throw domain_error("cannot standardize a sequence with repeated entries");
        out[order[rank]] = static_cast<int>(rank) + 1;
    }
    return Permutation(std::move(out), Permutation::unchecked_tag{});
}

inline Permutation standardize(std::initializer_list<int> s) {
    return standardize(std::span<const int>(s.begin(), s.size()));
}

namespace detail {

inline Permutation window(const Permutation& tau, std::size_t start, std::size_t length) {
    return standardize(tau.letters().subspan(start, length));
}

}  // namespace detail

/// Every embedding of sigma into tau, ordered by the position of the block.
inline std::vector<Expansion> occurrences(const Permutation& sigma, const Permutation& tau) {
    std::vector<Expansion> out;
    const std::size_t k = sigma.size();
    const std::size_t n = tau.size();
    if (k > n) return out;
    for (std::size_t start = 0; start + k <= n; ++start) {
        if (detail::window(tau, start, k) != sigma) continue;
        Expansion e{std::vector<int>(n, 0)};
        std::copy(sigma.begin(), sigma.end(), e.entries.begin() + static_cast<std::ptrdiff_t>(start));
        out.push_back(std::move(e));
    }
    return out;
}

/// Consecutive pattern containment sigma <= tau.
inline bool leq_consecutive(const Permutation& sigma, const Permutation& tau) {
    const std::size_t k = sigma.size();
    const std::size_t n = tau.size();
    if (k > n) return false;
    for (std::size_t start = 0; start + k <= n; ++start)
        if (detail::window(tau, start, k) == sigma) return true;
    return false;
}

inline bool is_monotone(const Permutation& tau) {
    auto l = tau.letters();
    return std::is_sorted(l.begin(), l.end()) || std::is_sorted(l.begin(), l.end(), std::greater<>{});
}

/// The elements covered by tau. A monotone tau covers one element, reached
/// through the suffix embedding (position 1 reduced); otherwise the prefix
/// child comes first, then the suffix child.
inline std::vector<Cover<Permutation>> down_covers(const Permutation& tau) {
    const std::size_t n = tau.size();
    if (n < 2) throw domain_error("a permutation of length 1 covers nothing");
    auto suffix = Cover<Permutation>{detail::window(tau, 1, n - 1), 1};
    if (is_monotone(tau)) return {std::move(suffix)};
    return {Cover<Permutation>{detail::window(tau, 0, n - 1), n}, std::move(suffix)};
}

inline Permutation affix(const Permutation& tau, std::size_t k, Side side) {
    if (k < 1 || k > tau.size())
        throw domain_error("affix length " + std::to_string(k) + " out of range for length " +
                           std::to_string(tau.size()));
    return detail::window(tau, side == Side::Prefix ? 0 : tau.size() - k, k);
}

/// Standard form of tau(2)..tau(n-1).
inline Permutation interior(const Permutation& tau) {
    if (tau.size() <= 2) throw domain_error("interior needs length > 2");
    return detail::window(tau, 1, tau.size() - 2);
}

/// Longest permutation that is both a proper prefix and a suffix of tau.
inline Permutation exterior(const Permutation& tau) {
    if (tau.size() < 2) throw domain_error("exterior needs length >= 2");
    for (std::size_t k = tau.size() - 1; k > 1; --k) {
        auto pre = affix(tau, k, Side::Prefix);
        if (pre == affix(tau, k, Side::Suffix)) return pre;
    }
    return Permutation{};
}

// Text form: digit string when n <= 9, comma-separated otherwise.
inline std::string to_string(const Permutation& p) {
    std::string out;
    const bool digits = p.size() <= 9;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!digits && i > 0) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

inline std::string to_string(const Expansion& e) {
    std::string out;
    const bool digits = std::all_of(e.entries.begin(), e.entries.end(), [](int v) { return v <= 9; });
    for (std::size_t i = 0; i < e.entries.size(); ++i) {
        if (!digits && i > 0) out += ',';
        out += std::to_string(e.entries[i]);
    }
    return out;
}

inline Permutation parse_permutation(std::string_view text) {
    std::vector<int> letters;
    auto bad = [&] { return parse_error("cannot parse permutation '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') throw bad();
            letters.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            auto field = text.substr(pos, next - pos);
            if (field.empty() || field.size() > 9 ||
                !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw bad();
            letters.push_back(std::stoi(std::string(field)));
            pos = next + 1;
        }
    }
    try {
        return Permutation(std::move(letters));
    } catch (const parse_error&) {
        throw bad();
    }
}

/// All permutations of length n in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<Permutation> out;
    std::vector<int> letters(n);
    std::iota(letters.begin(), letters.end(), 1);
    do {
        out.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

}  // namespace posetmorse

template <>
struct std::hash<posetmorse::Permutation> {
    std::size_t operator()(const posetmorse::Permutation& p) const noexcept {
        std::size_t h = p.size();
        for (int v : p) h = h * 31 + static_cast<std::size_t>(v);
        return h;
    }
};
