#pragma once

/**
 * @file crosscheck.hpp
 * @brief Exhaustive harness running every Möbius route and structural
 *        invariant over all intervals up to a size cap.
 */

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "cache.hpp"
#include "chains.hpp"
#include "closed_form.hpp"
#include "morse.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "poset.hpp"

namespace posetmorse {

struct Mismatch {
    std::string check;
    std::string bottom;
    std::string top;
    std::string detail;
};

struct IntervalRecord {
    std::string bottom;
    std::string top;
    std::int64_t mu_closed = 0;
    std::int64_t mu_morse = 0;
    std::int64_t mu_brute = 0;
    std::optional<std::int64_t> euler;
    std::size_t chains = 0;
    std::size_t critical_count = 0;
    std::optional<HomotopyType> homotopy;
};

struct CrosscheckReport {
    std::string poset;
    std::size_t max_size = 0;
    std::vector<IntervalRecord> records;
    std::vector<Mismatch> mismatches;

    std::size_t count_checks(std::string_view check) const {
        return static_cast<std::size_t>(
            std::count_if(mismatches.begin(), mismatches.end(), [&](const Mismatch& m) { return m.check == check; }));
    }
};

namespace detail {

inline std::int64_t closed_form(const PatternPoset&, const Interval<Permutation>& iv) {
    return mobius_pattern(iv.bottom, iv.top);
}

inline std::int64_t closed_form(const FactorOrder&, const Interval<Word>& iv) { return mobius_factor(iv.bottom, iv.top); }

inline std::string runs_text(const std::vector<ChainInterval>& runs) {
    std::string out = "{";
    for (std::size_t k = 0; k < runs.size(); ++k)
        out += (k ? "," : "") + std::string("[") + std::to_string(runs[k].first) + "," + std::to_string(runs[k].last) + "]";
    return out + "}";
}

}  // namespace detail

/// Runs every route and invariant on one interval, appending any failures.
template <ChainPoset P>
IntervalRecord check_interval(const P& poset, const Interval<ElementOf<P>>& iv, std::vector<Mismatch>& out,
                              MobiusCache* cache = nullptr) {
    IntervalRecord rec;
    rec.bottom = poset.format(iv.bottom);
    rec.top = poset.format(iv.top);
    auto fail = [&](std::string check, std::string detail) {
        out.push_back({std::move(check), rec.bottom, rec.top, std::move(detail)});
    };

    const auto report = morse_report(poset, iv);
    const std::size_t gap = poset.rank(iv.top) - poset.rank(iv.bottom);
    rec.mu_closed = detail::closed_form(poset, iv);
    rec.mu_morse = report.mobius;
    rec.mu_brute = cache ? mobius_bruteforce(poset, iv, *cache) : mobius_bruteforce(poset, iv);
    rec.chains = report.chains.size();
    rec.critical_count = report.critical_chains.size();
    rec.homotopy = report.homotopy;
    if (gap >= 2) rec.euler = euler_characteristic(poset, iv).value;

    if (rec.mu_closed != rec.mu_brute || rec.mu_morse != rec.mu_brute)
        fail("mobius", "closed " + std::to_string(rec.mu_closed) + ", morse " + std::to_string(rec.mu_morse) +
                           ", brute " + std::to_string(rec.mu_brute));
    if (rec.euler && *rec.euler != rec.mu_brute)
        fail("euler", "euler " + std::to_string(*rec.euler) + ", brute " + std::to_string(rec.mu_brute));
    if (rec.mu_closed < -1 || rec.mu_closed > 1) fail("range", "closed form " + std::to_string(rec.mu_closed));

    std::vector<MaximalChain<ElementOf<P>>> chains;
    for (const auto& a : report.chains) chains.push_back(a.chain);
    if (!is_poset_lex(chains)) fail("poset-lex", "chain-id order is not a poset lexicographic order");

    if (rec.critical_count > 1) fail("critical-last", std::to_string(rec.critical_count) + " critical chains");
    if (rec.critical_count == 1 && report.critical_chains[0] + 1 != report.chains.size())
        fail("critical-last", "critical chain is not the lexicographically last");

    if (report.homotopy) {
        const auto& h = *report.homotopy;
        using K = HomotopyType::Kind;
        if (h.kind == K::CellComplex) fail("homotopy", "more than one critical chain: " + to_string(h));
        if ((h.kind == K::Contractible) != (rec.mu_brute == 0))
            fail("homotopy", to_string(h) + " with mu " + std::to_string(rec.mu_brute));
        if (h.kind == K::Sphere && rec.mu_brute != (h.dimension % 2 == 0 ? 1 : -1))
            fail("homotopy", to_string(h) + " with mu " + std::to_string(rec.mu_brute));
        if ((rec.mu_closed == 0) != (h.kind == K::Contractible))
            fail("homotopy", "closed form " + std::to_string(rec.mu_closed) + " vs " + to_string(h));
    }

    if constexpr (std::is_same_v<P, PatternPoset>) {
        for (std::size_t idx = 0; idx < report.chains.size(); ++idx) {
            const auto& a = report.chains[idx];
            const auto id = chain_id(a.chain.labels);
            auto fast = msis_fast_pattern(a.chain);
            if (fast != a.msis)
                fail("msi-characterization",
                     "chain " + id + ": fast " + detail::runs_text(fast) + ", brute " + detail::runs_text(a.msis));
            const auto steps = classify_steps(a.chain);
            for (std::size_t i = 1; i < a.chain.length(); ++i) {
                if (steps[i - 1] == StepClass::StrongDescent &&
                    std::find(a.msis.begin(), a.msis.end(), ChainInterval{i, i}) == a.msis.end())
                    fail("descent-singleton", "chain " + id + ": strong descent at rho" + std::to_string(i) + " is not an MSI");
                if (steps[i - 1] == StepClass::Ascent &&
                    std::any_of(a.msis.begin(), a.msis.end(), [&](const ChainInterval& r) { return r.contains(i); }))
                    fail("ascent-free", "chain " + id + ": ascent at rho" + std::to_string(i) + " lies in an MSI");
            }
        }
        // On a lex-last chain with strictly decreasing id, only the final internal descent may be strong.
        if (!report.chains.empty()) {
            const auto& last = report.chains.back().chain;
            const auto steps = classify_steps(last);
            bool decreasing = std::is_sorted(last.labels.rbegin(), last.labels.rend());
            for (std::size_t i = 0; decreasing && i + 1 < steps.size(); ++i)
                if (steps[i] == StepClass::StrongDescent)
                    fail("decreasing-id", "chain " + chain_id(last.labels) + ": strong descent before the last step");
        }
    }
    return rec;
}

/// Checks every interval of `intervals` on up to `jobs` threads.
template <ChainPoset P>
CrosscheckReport crosscheck(const P& poset, const std::vector<Interval<ElementOf<P>>>& intervals, std::size_t max_size,
                            unsigned jobs = 0, MobiusCache* cache = nullptr) {
    CrosscheckReport report;
    report.poset = std::string(poset.tag());
    report.max_size = max_size;
    report.records.resize(intervals.size());
    std::vector<std::vector<Mismatch>> failures(intervals.size());
    parallel_for(intervals.size(), jobs, [&](std::size_t i) {
        report.records[i] = check_interval(poset, intervals[i], failures[i], cache);
    });
    for (auto& f : failures)
        for (auto& m : f) report.mismatches.push_back(std::move(m));
    return report;
}

inline CrosscheckReport crosscheck_patterns(std::size_t max_size, unsigned jobs = 0, bool force = false,
                                            MobiusCache* cache = nullptr) {
    PatternPoset poset{force};
    if (max_size > poset.max_top_rank() && !force)
        throw guardrail_error("pattern crosscheck is capped at size " + std::to_string(poset.max_top_rank()));
    return crosscheck(poset, all_pattern_intervals(max_size), max_size, jobs, cache);
}

inline CrosscheckReport crosscheck_words(const Alphabet& alphabet, std::size_t max_size, unsigned jobs = 0,
                                         bool force = false, MobiusCache* cache = nullptr) {
    FactorOrder poset{alphabet, force};
    if (max_size > poset.max_top_rank() && !force)
        throw guardrail_error("factor crosscheck is capped at size " + std::to_string(poset.max_top_rank()));
    std::vector<Word> tops;
    for (std::size_t n = 0; n <= max_size; ++n)
        for (auto& w : all_words(alphabet.size(), n)) tops.push_back(std::move(w));
    return crosscheck(poset, all_intervals(poset, tops), max_size, jobs, cache);
}

inline nlohmann::json to_json(const CrosscheckReport& r) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& rec : r.records) {
        records.push_back({{"bottom", rec.bottom},
                           {"top", rec.top},
                           {"mu_closed", rec.mu_closed},
                           {"mu_morse", rec.mu_morse},
                           {"mu_brute", rec.mu_brute},
                           {"euler", rec.euler ? nlohmann::json(*rec.euler) : nlohmann::json(nullptr)},
                           {"chains", rec.chains},
                           {"critical_count", rec.critical_count},
                           {"homotopy", rec.homotopy ? to_json(*rec.homotopy) : nlohmann::json(nullptr)}});
    }
    nlohmann::json mismatches = nlohmann::json::array();
    for (const auto& m : r.mismatches)
        mismatches.push_back({{"check", m.check}, {"bottom", m.bottom}, {"top", m.top}, {"detail", m.detail}});
    return {{"poset", r.poset},
            {"max_size", r.max_size},
            {"intervals", r.records.size()},
            {"mismatch_count", r.mismatches.size()},
            {"mismatches", std::move(mismatches)},
            {"records", std::move(records)}};
}

}  // namespace posetmorse
