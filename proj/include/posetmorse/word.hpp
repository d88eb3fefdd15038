#pragma once

/**
 * @file word.hpp
 * @brief Words over a finite ordered alphabet under factor order.
 *
 * A Word stores letters as indices into an Alphabet, so comparison follows the
 * declared order of symbols. The Alphabet is only needed to parse and print.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace posetmorse {

using Letter = std::uint16_t;

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    Word factor(std::size_t start, std::size_t length) const {
        return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(start),
                                        letters_.begin() + static_cast<std::ptrdiff_t>(start + length)));
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

/// Declared, totally ordered set of symbols. Single-character symbols print as
/// plain strings; longer symbols are joined with commas.
class Alphabet {
public:
    Alphabet() : Alphabet(std::vector<std::string>{"a", "b"}) {}

    explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
        if (symbols_.empty()) throw parse_error("alphabet must be nonempty");
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            const auto& s = symbols_[i];
            if (s.empty() || s.find(',') != std::string::npos || s == "ε")
                throw parse_error("invalid alphabet symbol '" + s + "'");
            if (std::find(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(i), s) !=
                symbols_.begin() + static_cast<std::ptrdiff_t>(i))
                throw parse_error("duplicate alphabet symbol '" + s + "'");
        }
        single_char_ = std::all_of(symbols_.begin(), symbols_.end(),
                                   [](const std::string& s) { return s.size() == 1; });
    }

    // "abc" declares three one-character symbols; "x1,x2" declares two symbols.
    static Alphabet parse(std::string_view text) {
        std::vector<std::string> symbols;
        if (text.find(',') == std::string_view::npos) {
            for (char c : text) symbols.emplace_back(1, c);
        } else {
            std::size_t pos = 0;
            while (pos <= text.size()) {
                auto next = text.find(',', pos);
                if (next == std::string_view::npos) next = text.size();
                symbols.emplace_back(text.substr(pos, next - pos));
                pos = next + 1;
            }
        }
        return Alphabet(std::move(symbols));
    }

    // The first k lowercase letters.
    static Alphabet first_letters(std::size_t k) {
        std::vector<std::string> symbols;
        for (std::size_t i = 0; i < k; ++i) symbols.emplace_back(1, static_cast<char>('a' + i));
        return Alphabet(std::move(symbols));
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& symbol(Letter l) const { return symbols_.at(l); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }

    bool contains(const Word& w) const {
        return std::all_of(w.begin(), w.end(), [&](Letter l) { return l < symbols_.size(); });
    }

    std::string format(const Word& w) const {
        if (w.empty()) return "ε";
        std::string out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!single_char_ && i > 0) out += ',';
            out += symbol(w[i]);
        }
        return out;
    }

    // Accepts "" and "ε" for the empty word.
    Word parse_word(std::string_view text) const {
        std::vector<Letter> letters;
        if (text.empty() || text == "ε") return Word{};
        auto lookup = [&](std::string_view sym) {
            auto it = std::find(symbols_.begin(), symbols_.end(), sym);
            if (it == symbols_.end())
                throw parse_error("letter '" + std::string(sym) + "' of '" + std::string(text) +
                                  "' is not in the alphabet");
            return static_cast<Letter>(it - symbols_.begin());
        };
        if (single_char_ && text.find(',') == std::string_view::npos) {
            for (std::size_t i = 0; i < text.size(); ++i) letters.push_back(lookup(text.substr(i, 1)));
        } else {
            std::size_t pos = 0;
            while (pos <= text.size()) {
                auto next = text.find(',', pos);
                if (next == std::string_view::npos) next = text.size();
                letters.push_back(lookup(text.substr(pos, next - pos)));
                pos = next + 1;
            }
        }
        return Word(std::move(letters));
    }

private:
    std::vector<std::string> symbols_;
    bool single_char_ = true;
};

/// True iff u occurs as consecutive letters of w.
inline bool is_factor(const Word& u, const Word& w) {
    if (u.empty()) return true;
    if (u.size() > w.size()) return false;
    return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
}

inline bool is_flat(const Word& w) {
    if (w.empty()) throw domain_error("flatness is undefined for the empty word");
    return std::adjacent_find(w.begin(), w.end(), std::not_equal_to<>{}) == w.end();
}

inline Word inner_word(const Word& w) {
    if (w.size() < 2) throw domain_error("inner word needs length >= 2");
    return w.factor(1, w.size() - 2);
}

/// Longest proper prefix that is also a suffix (the border); may be empty.
inline Word outer_word(const Word& w) {
    if (w.empty()) throw domain_error("outer word of the empty word is undefined");
    // Failure function of the prefix automaton.
    std::vector<std::size_t> border(w.size() + 1, 0);
    for (std::size_t i = 1, k = 0; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) k = border[k];
        if (w[i] == w[k]) ++k;
        border[i + 1] = k;
    }
    return w.factor(0, border[w.size()]);
}

/// Factor-order analogue of the permutation cover rule: a flat word covers a
/// single word through position 1, otherwise prefix child first, then suffix child.
inline std::vector<Cover<Word>> down_covers_word(const Word& w) {
    if (w.empty()) throw domain_error("the empty word covers nothing");
    const std::size_t n = w.size();
    auto suffix = Cover<Word>{w.factor(1, n - 1), 1};
    if (is_flat(w)) return {std::move(suffix)};
    return {Cover<Word>{w.factor(0, n - 1), n}, std::move(suffix)};
}

/// Every word of the given length over an alphabet of size k, lexicographic.
inline std::vector<Word> all_words(std::size_t k, std::size_t length) {
    std::vector<Word> out;
    std::vector<Letter> letters(length, 0);
    while (true) {
        out.emplace_back(letters);
        std::size_t i = length;
        while (i > 0 && letters[i - 1] + 1u == k) letters[--i] = 0;
        if (i == 0) break;
        ++letters[i - 1];
    }
    return out;
}

}  // namespace posetmorse

template <>
struct std::hash<posetmorse::Word> {
    std::size_t operator()(const posetmorse::Word& w) const noexcept {
        std::size_t h = w.size() + 0x9e3779b9u;
        for (auto l : w) h = h * 131 + l;
        return h;
    }
};
