#pragma once

/**
 * @file report.hpp
 * @brief Text and JSON renderings of chains and Morse reports.
 *
 * The text layout is one tab-separated row per chain: the chain id, the top,
 * then alternating label / embedding columns. Runs of the chain (I(C) or J(C)
 * members) are marked with brackets: `[` before the first element of a run,
 * `]` after its last, in both the element columns and the chain id, where the
 * dash between l_i and l_{i+1} stands for rho_i. Overlapping runs interleave.
 */

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "chains.hpp"
#include "morse.hpp"
#include "poset.hpp"

namespace posetmorse {

/// Embedding of elements[i] in the coordinates of the top, reduced positions
/// shown as 0.
inline std::string embedding_text(const PatternPoset&, const MaximalChain<Permutation>& c, std::size_t i) {
    return to_string(embedding(c, i));
}

/// Word embeddings show reduced positions as '.'.
inline std::string embedding_text(const FactorOrder& poset, const MaximalChain<Word>& c, std::size_t i) {
    const auto& alphabet = poset.alphabet();
    const bool single = std::all_of(alphabet.symbols().begin(), alphabet.symbols().end(),
                                    [](const std::string& s) { return s.size() == 1; });
    std::string out;
    const std::size_t n = c.top().size();
    for (std::size_t pos = 0; pos < n; ++pos) {
        if (!single && pos > 0) out += ',';
        if (pos >= c.offsets[i] && pos < c.offsets[i] + c.elements[i].size())
            out += alphabet.symbol(c.elements[i][pos - c.offsets[i]]);
        else
            out += '.';
    }
    return out;
}

namespace detail {

inline std::size_t opens_at(const std::vector<ChainInterval>& runs, std::size_t i) {
    return static_cast<std::size_t>(std::count_if(runs.begin(), runs.end(), [&](auto& r) { return r.first == i; }));
}

inline std::size_t closes_at(const std::vector<ChainInterval>& runs, std::size_t i) {
    return static_cast<std::size_t>(std::count_if(runs.begin(), runs.end(), [&](auto& r) { return r.last == i; }));
}

}  // namespace detail

inline std::string bracketed_chain_id(const std::vector<std::size_t>& labels, const std::vector<ChainInterval>& runs) {
    std::string out;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (k > 0) {
            // Separator between l_k and l_{k+1} stands for rho_k.
            out.append(detail::opens_at(runs, k), '[');
            out += '-';
            out.append(detail::closes_at(runs, k), ']');
        }
        out += std::to_string(labels[k]);
    }
    return out;
}

inline std::string chain_table_header(std::size_t length) {
    std::string out = "Chain Id\trho0";
    for (std::size_t i = 1; i <= length; ++i) out += "\tl" + std::to_string(i) + "\trho" + std::to_string(i);
    return out;
}

template <ChainPoset P>
std::string chain_table_row(const P& poset, const MaximalChain<ElementOf<P>>& c, const std::vector<ChainInterval>& runs) {
    std::string out = bracketed_chain_id(c.labels, runs);
    out += '\t' + poset.format(c.top());
    for (std::size_t i = 1; i <= c.length(); ++i) {
        out += '\t' + std::to_string(c.labels[i - 1]) + '\t';
        out.append(detail::opens_at(runs, i), '[');
        out += embedding_text(poset, c, i);
        out.append(detail::closes_at(runs, i), ']');
    }
    return out;
}

template <ChainPoset P>
std::string interval_text(const P& poset, const Interval<ElementOf<P>>& iv) {
    return "[" + poset.format(iv.bottom) + "," + poset.format(iv.top) + "]";
}

/// Two sections: every chain with its I(C) brackets, then the chains whose
/// J(C) differs from I(C), with J(C) brackets.
template <ChainPoset P>
std::string morse_table(const P& poset, const MorseReport<ElementOf<P>>& report) {
    std::ostringstream os;
    const std::size_t n = poset.rank(report.interval.top) - poset.rank(report.interval.bottom);
    os << "I(C) intervals for " << interval_text(poset, report.interval) << '\n';
    os << chain_table_header(n) << '\n';
    for (const auto& a : report.chains) os << chain_table_row(poset, a.chain, a.msis) << '\n';
    os << '\n';
    os << "J(C) intervals for " << interval_text(poset, report.interval) << ", chains where J(C) differs from I(C)\n";
    os << chain_table_header(n) << '\n';
    for (const auto& a : report.chains)
        if (a.j != a.msis) os << chain_table_row(poset, a.chain, a.j) << '\n';
    return os.str();
}

inline std::string table1() {
    PatternPoset poset;
    return morse_table(poset, morse_report(poset, Interval<Permutation>{parse_permutation("1"), parse_permutation("213546")}));
}

inline nlohmann::json to_json(const ChainInterval& iv) { return nlohmann::json::array({iv.first, iv.last}); }

inline nlohmann::json to_json(const HomotopyType& h) {
    switch (h.kind) {
        case HomotopyType::Kind::Contractible: return {{"type", "contractible"}};
        case HomotopyType::Kind::Sphere: return {{"type", "sphere"}, {"dimension", h.dimension}};
        case HomotopyType::Kind::CellComplex: return {{"type", "cell-complex"}, {"cells", h.cells}};
    }
    return nullptr;
}

template <ChainPoset P>
nlohmann::json chain_json(const P& poset, const MaximalChain<ElementOf<P>>& c) {
    nlohmann::json elements = nlohmann::json::array();
    nlohmann::json embeddings = nlohmann::json::array();
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
        elements.push_back(poset.format(c.elements[i]));
        embeddings.push_back(i == 0 ? poset.format(c.top()) : embedding_text(poset, c, i));
    }
    return {{"id", chain_id(c.labels)}, {"labels", c.labels}, {"elements", elements}, {"embeddings", embeddings}};
}

template <ChainPoset P>
nlohmann::json to_json(const P& poset, const MorseReport<ElementOf<P>>& report) {
    nlohmann::json chains = nlohmann::json::array();
    for (const auto& a : report.chains) {
        auto j = chain_json(poset, a.chain);
        j["I"] = nlohmann::json::array();
        for (const auto& iv : a.msis) j["I"].push_back(to_json(iv));
        j["J"] = nlohmann::json::array();
        for (const auto& iv : a.j) j["J"].push_back(to_json(iv));
        j["critical"] = a.critical.critical;
        j["dimension"] = a.critical.dimension ? nlohmann::json(*a.critical.dimension) : nlohmann::json(nullptr);
        chains.push_back(std::move(j));
    }
    return {{"poset", std::string(poset.tag())},
            {"bottom", poset.format(report.interval.bottom)},
            {"top", poset.format(report.interval.top)},
            {"chains", std::move(chains)},
            {"critical_chains", report.critical_chains},
            {"mobius", report.mobius},
            {"homotopy", report.homotopy ? to_json(*report.homotopy) : nlohmann::json(nullptr)}};
}

}  // namespace posetmorse
