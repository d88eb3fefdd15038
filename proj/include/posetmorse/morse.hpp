#pragma once

/**
 * @file morse.hpp
 * @brief Skipped intervals, the I(C) -> J(C) conversion, critical chains, and
 *        the Möbius value and homotopy type they determine.
 *
 * Chain intervals are index ranges [first, last] into a chain's elements with
 * 1 <= first <= last <= n - 1, i.e. runs of the open part of the chain.
 * Chains are compared as element sets. Both posets are graded, so two chains
 * of one interval share an element exactly when they agree at that index.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chains.hpp"
#include "error.hpp"
#include "poset.hpp"

namespace posetmorse {

struct ChainInterval {
    std::size_t first;
    std::size_t last;

    bool contains(const ChainInterval& o) const { return first <= o.first && o.last <= last; }
    bool contains(std::size_t i) const { return first <= i && i <= last; }
    std::size_t size() const { return last - first + 1; }

    friend bool operator==(const ChainInterval&, const ChainInterval&) = default;
    friend auto operator<=>(const ChainInterval&, const ChainInterval&) = default;
};

struct HomotopyType {
    enum class Kind { Contractible, Sphere, CellComplex };
    Kind kind = Kind::Contractible;
    // Sphere dimension; unused otherwise.
    int dimension = 0;
    // Critical dimensions when more than one chain is critical.
    std::vector<int> cells;

    static HomotopyType contractible() { return {}; }
    static HomotopyType sphere(int d) { return {Kind::Sphere, d, {}}; }

    friend bool operator==(const HomotopyType&, const HomotopyType&) = default;
};

inline std::string to_string(const HomotopyType& h) {
    switch (h.kind) {
        case HomotopyType::Kind::Contractible: return "contractible";
        case HomotopyType::Kind::Sphere: return "sphere S^" + std::to_string(h.dimension);
        case HomotopyType::Kind::CellComplex: {
            std::string out = "cell complex (";
            for (std::size_t i = 0; i < h.cells.size(); ++i)
                out += (i ? "," : "") + std::to_string(h.cells[i]);
            return out + ")";
        }
    }
    return "?";
}

struct CriticalData {
    bool critical = false;
    std::optional<int> dimension;
};

template <class E>
struct ChainAnalysis {
    MaximalChain<E> chain;
    std::vector<ChainInterval> msis;  // I(C)
    std::vector<ChainInterval> j;     // J(C)
    CriticalData critical;
};

template <class E>
struct MorseReport {
    Interval<E> interval;
    std::vector<ChainAnalysis<E>> chains;  // in chain-id order
    std::vector<std::size_t> critical_chains;
    std::int64_t mobius = 0;
    // Absent when the rank gap is below 2.
    std::optional<HomotopyType> homotopy;
};

namespace detail {

// Smallest index range of the open part outside of which c and d agree.
template <class E>
std::optional<ChainInterval> disagreement(const MaximalChain<E>& c, const MaximalChain<E>& d) {
    std::optional<ChainInterval> span;
    for (std::size_t i = 1; i + 1 < c.elements.size(); ++i) {
        if (c.elements[i] == d.elements[i]) continue;
        if (!span)
            span = ChainInterval{i, i};
        else
            span->last = i;
    }
    return span;
}

inline std::vector<ChainInterval> containment_minimal(std::vector<ChainInterval> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<ChainInterval> out;
    for (const auto& a : v) {
        bool minimal = std::none_of(v.begin(), v.end(), [&](const ChainInterval& b) { return b != a && a.contains(b); });
        if (minimal) out.push_back(a);
    }
    return out;
}

}  // namespace detail

/// Every run I of the open part of c such that the elements of c outside I
/// all lie on some earlier chain. Ordered by start, then end.
template <class E>
std::vector<ChainInterval> skipped_intervals(const MaximalChain<E>& c, const std::vector<MaximalChain<E>>& earlier) {
    std::vector<ChainInterval> spans;
    for (const auto& d : earlier)
        if (auto s = detail::disagreement(c, d)) spans.push_back(*s);
    std::vector<ChainInterval> out;
    const std::size_t n = c.length();
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            ChainInterval cand{i, j};
            if (std::any_of(spans.begin(), spans.end(), [&](const ChainInterval& s) { return cand.contains(s); }))
                out.push_back(cand);
        }
    return out;
}

/// I(C): the containment-minimal skipped intervals, by start then end.
template <class E>
std::vector<ChainInterval> minimal_skipped_intervals(const MaximalChain<E>& c,
                                                     const std::vector<MaximalChain<E>>& earlier) {
    return detail::containment_minimal(skipped_intervals(c, earlier));
}

/// J(C) from I(C) (ordered by first encounter). The first remaining interval
/// is taken, the rest are truncated by it, and truncations that are empty or
/// not containment-minimal are dropped; repeat until nothing remains.
inline std::vector<ChainInterval> build_j(const std::vector<ChainInterval>& msis) {
    std::vector<ChainInterval> out;
    std::vector<ChainInterval> remaining = msis;
    while (!remaining.empty()) {
        const ChainInterval chosen = remaining.front();
        out.push_back(chosen);
        std::vector<ChainInterval> truncated;
        for (std::size_t k = 1; k < remaining.size(); ++k) {
            auto r = remaining[k];
            if (chosen.contains(r)) continue;
            if (r.contains(chosen.first) && r.contains(chosen.last) && r.first < chosen.first &&
                chosen.last < r.last)
                throw internal_error("truncating an interval of I(C) left a non-contiguous remainder");
            if (r.contains(chosen.first) && r.first < chosen.first) r.last = chosen.first - 1;
            else if (r.contains(chosen.last)) r.first = chosen.last + 1;
            truncated.push_back(r);
        }
        remaining.clear();
        for (std::size_t k = 0; k < truncated.size(); ++k) {
            const auto& a = truncated[k];
            bool minimal = true;
            for (std::size_t m = 0; m < truncated.size() && minimal; ++m) {
                if (m == k) continue;
                const auto& b = truncated[m];
                // Keep the earliest of identical truncations.
                if (a == b ? m < k : a.contains(b)) minimal = false;
            }
            if (minimal) remaining.push_back(a);
        }
    }
    return out;
}

/// Critical iff J(C) covers the open part of the chain; then d = #J(C) - 1.
/// A single cover (empty open part) is critical with d = -1.
inline CriticalData critical_from_j(std::size_t chain_length, const std::vector<ChainInterval>& j) {
    if (chain_length == 0) return {};
    std::vector<bool> covered(chain_length, false);
    for (const auto& iv : j)
        for (std::size_t i = iv.first; i <= iv.last; ++i) covered[i] = true;
    for (std::size_t i = 1; i < chain_length; ++i)
        if (!covered[i]) return {};
    return {true, static_cast<int>(j.size()) - 1};
}

template <class E>
CriticalData critical_data(const MaximalChain<E>& c, const std::vector<MaximalChain<E>>& earlier) {
    return critical_from_j(c.length(), build_j(minimal_skipped_intervals(c, earlier)));
}

/// Full Morse analysis of one interval using the chain-id order.
template <ChainPoset P>
MorseReport<ElementOf<P>> morse_report(const P& poset, const Interval<ElementOf<P>>& iv) {
    using E = ElementOf<P>;
    MorseReport<E> report{iv, {}, {}, 0, std::nullopt};
    auto chains = maximal_chains(poset, iv);
    const std::size_t gap = poset.rank(iv.top) - poset.rank(iv.bottom);
    std::vector<MaximalChain<E>> earlier;
    for (auto& c : chains) {
        ChainAnalysis<E> a;
        a.msis = minimal_skipped_intervals(c, earlier);
        a.j = build_j(a.msis);
        a.critical = critical_from_j(c.length(), a.j);
        if (a.critical.critical) {
            report.critical_chains.push_back(report.chains.size());
            report.mobius += (*a.critical.dimension % 2 == 0) ? 1 : -1;
        }
        earlier.push_back(c);
        a.chain = std::move(c);
        report.chains.push_back(std::move(a));
    }
    if (gap == 0) report.mobius = 1;
    if (gap >= 2) {
        if (report.critical_chains.empty()) {
            report.homotopy = HomotopyType::contractible();
        } else if (report.critical_chains.size() == 1) {
            report.homotopy = HomotopyType::sphere(*report.chains[report.critical_chains[0]].critical.dimension);
        } else {
            HomotopyType h{HomotopyType::Kind::CellComplex, 0, {}};
            for (auto idx : report.critical_chains) h.cells.push_back(*report.chains[idx].critical.dimension);
            report.homotopy = h;
        }
    }
    return report;
}

/// Möbius value as the signed count of critical chains.
template <ChainPoset P>
std::int64_t mobius_morse(const P& poset, const Interval<ElementOf<P>>& iv) {
    return morse_report(poset, iv).mobius;
}

/// Contractible with no critical chain, a sphere of the critical dimension
/// with exactly one, and a bare list of cell dimensions otherwise.
template <ChainPoset P>
HomotopyType homotopy_type(const P& poset, const Interval<ElementOf<P>>& iv) {
    validate(poset, iv);
    if (poset.rank(iv.top) - poset.rank(iv.bottom) < 2)
        throw domain_error("homotopy type needs a rank gap of at least 2; the order complex of [" +
                           poset.format(iv.bottom) + ", " + poset.format(iv.top) + "] is degenerate");
    return *morse_report(poset, iv).homotopy;
}

/// MSIs of a pattern-poset chain read off its labels and elements alone:
/// singletons at strong descents, and runs strictly between rho_i and
/// rho_j = x(rho_i) when x(rho_i) is not below i(rho_i) and the labels
/// l_{i+1} .. l_j decrease.
inline std::vector<ChainInterval> msis_fast_pattern(const MaximalChain<Permutation>& c) {
    std::vector<ChainInterval> out;
    const auto steps = classify_steps(c);
    for (std::size_t i = 1; i < c.length(); ++i)
        if (steps[i - 1] == StepClass::StrongDescent) out.push_back({i, i});

    for (std::size_t i = 0; i + 2 <= c.length(); ++i) {
        const auto& rho = c.elements[i];
        if (rho.size() < 3) continue;
        const auto ext = exterior(rho);
        if (leq_consecutive(ext, interior(rho))) continue;
        const std::size_t j = i + (rho.size() - ext.size());
        // A single label is not a decreasing run: the open part would be empty.
        if (j < i + 2 || j > c.length() || c.elements[j] != ext) continue;
        bool decreasing = true;
        for (std::size_t k = i + 1; k < j; ++k)
            if (c.labels[k - 1] <= c.labels[k]) decreasing = false;
        if (decreasing) out.push_back({i + 1, j - 1});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace posetmorse
