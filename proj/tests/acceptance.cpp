// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <posetmorse/posetmorse.hpp>

#include "oracles.hpp"

using namespace posetmorse;

namespace {

struct Check {
    std::ostringstream notes;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) notes << what;
        if (!cond) ok = false;
    }
};

Permutation P(const char* s) { return parse_permutation(s); }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

void table_reproduction(Check& c) {
    const std::string text = table1();
    c.expect(text == slurp(std::filesystem::path(POSETMORSE_GOLDEN_DIR) / "table1.txt"), "differs from golden file; ");

    auto lines = lines_of(text);
    // Title, header, 13 rows, blank, title, header, 1 row.
    c.expect(lines.size() == 19, "unexpected line count; ");
    if (lines.size() != 19) return;
    c.expect(lines[2].rfind("1-2-3-4-5\t", 0) == 0, "first chain id; ");
    c.expect(lines[14].rfind("6[-5[-]4-]3[-]1\t", 0) == 0, "last chain id or brackets; ");
    c.expect(lines[18].rfind("6[-5-]4[-]3[-]1\t", 0) == 0, "J row; ");

    PatternPoset poset;
    auto r = morse_report(poset, Interval<Permutation>{P("1"), P("213546")});
    c.expect(r.chains.size() == 13, "chain count; ");
    for (std::size_t i = 0; i < r.chains.size(); ++i) {
        const bool differs = r.chains[i].j != r.chains[i].msis;
        c.expect(differs == (i + 1 == r.chains.size()), "J(C) differs from I(C) on a chain other than the last; ");
    }
    c.expect(chain_id(r.chains.front().chain.labels) == "1-2-3-4-5", "first id; ");
    c.expect(chain_id(r.chains.back().chain.labels) == "6-5-4-3-1", "last id; ");
}

template <ChainPoset Poset>
void agreement(Check& c, const Poset& poset, const std::vector<Interval<ElementOf<Poset>>>& intervals,
               std::size_t& count) {
    for (const auto& iv : intervals) {
        ++count;
        std::int64_t closed = 0;
        if constexpr (std::is_same_v<Poset, PatternPoset>)
            closed = mobius_pattern(iv.bottom, iv.top);
        else
            closed = mobius_factor(iv.bottom, iv.top);
        const auto brute = mobius_bruteforce(poset, iv);
        const auto morse = mobius_morse(poset, iv);
        std::string where = "[" + poset.format(iv.bottom) + "," + poset.format(iv.top) + "] ";
        c.expect(closed == brute, where + "closed form vs brute force; ");
        c.expect(morse == brute, where + "morse vs brute force; ");
        if (poset.rank(iv.top) - poset.rank(iv.bottom) >= 2)
            c.expect(euler_characteristic(poset, iv).value == brute, where + "euler vs brute force; ");
    }
}

void pattern_agreement(Check& c) {
    std::size_t n = 0;
    agreement(c, PatternPoset{}, all_pattern_intervals(6), n);
    c.notes << n << " intervals";
}

void word_agreement(Check& c) {
    std::size_t n2 = 0, n3 = 0;
    agreement(c, FactorOrder{Alphabet::first_letters(2)}, all_word_intervals(2, 6), n2);
    agreement(c, FactorOrder{Alphabet::first_letters(3)}, all_word_intervals(3, 5), n3);
    c.notes << n2 << " over {a,b}, " << n3 << " over {a,b,c}";
}

void msi_characterization(Check& c) {
    PatternPoset poset;
    std::size_t chains = 0;
    for (const auto& iv : all_pattern_intervals(6)) {
        auto cs = maximal_chains(poset, iv);
        for (std::size_t k = 0; k < cs.size(); ++k) {
            ++chains;
            std::vector<MaximalChain<Permutation>> earlier(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(k));
            auto slow = minimal_skipped_intervals(cs[k], earlier);
            auto fast = msis_fast_pattern(cs[k]);
            std::sort(slow.begin(), slow.end());
            std::sort(fast.begin(), fast.end());
            c.expect(slow == fast, "[" + poset.format(iv.bottom) + "," + poset.format(iv.top) + "] chain " +
                                       chain_id(cs[k].labels) + "; ");
        }
    }
    c.notes << chains << " chains";
}

void structural_properties(Check& c) {
    PatternPoset poset;
    std::size_t spheres = 0, contractible = 0;
    for (const auto& iv : all_pattern_intervals(6)) {
        auto r = morse_report(poset, iv);
        const std::string where = "[" + poset.format(iv.bottom) + "," + poset.format(iv.top) + "] ";
        for (const auto& a : r.chains) {
            auto steps = classify_steps(a.chain);
            for (std::size_t i = 1; i <= steps.size(); ++i) {
                const auto s = steps[i - 1];
                if (s == StepClass::StrongDescent)
                    c.expect(std::find(a.msis.begin(), a.msis.end(), ChainInterval{i, i}) != a.msis.end(),
                             where + "strong descent is not a singleton MSI; ");
                if (s == StepClass::Ascent)
                    for (const auto& m : a.msis) c.expect(!m.contains(i), where + "ascent inside an MSI; ");
            }
        }
        c.expect(r.critical_chains.size() <= 1, where + "more than one critical chain; ");
        if (r.critical_chains.size() == 1)
            c.expect(r.critical_chains.front() + 1 == r.chains.size(), where + "critical chain is not the last; ");
        if (!r.homotopy) continue;
        const auto& h = *r.homotopy;
        if (r.mobius == 0) {
            c.expect(h.kind == HomotopyType::Kind::Contractible, where + "mu = 0 but not contractible; ");
            ++contractible;
        } else {
            c.expect(h.kind == HomotopyType::Kind::Sphere && r.mobius == (h.dimension % 2 == 0 ? 1 : -1),
                     where + "nonzero mu without matching sphere; ");
            ++spheres;
        }
    }
    c.notes << spheres << " spheres, " << contractible << " contractible";
}

void point_values(Check& c) {
    PatternPoset pp;
    FactorOrder fo{Alphabet::parse("ab")};
    auto pat = [&](const char* b, const char* t, std::int64_t mu, std::optional<HomotopyType> h) {
        Interval<Permutation> iv{P(b), P(t)};
        const std::string where = std::string("[") + b + "," + t + "] ";
        c.expect(oracle::mobius(oracle::from_text(b), oracle::from_text(t)) == mu, where + "oracle; ");
        c.expect(mobius_pattern(iv.bottom, iv.top) == mu, where + "closed form; ");
        c.expect(mobius_morse(pp, iv) == mu, where + "morse; ");
        c.expect(mobius_bruteforce(pp, iv) == mu, where + "brute force; ");
        if (h) c.expect(homotopy_type(pp, iv) == *h, where + "homotopy; ");
    };
    auto word = [&](const char* b, const char* t, std::int64_t mu) {
        Interval<Word> iv{fo.parse(b), fo.parse(t)};
        const std::string where = std::string("[") + b + "," + t + "] ";
        c.expect(oracle::mobius(std::string(b), std::string(t), "ab") == mu, where + "oracle; ");
        c.expect(mobius_factor(iv.bottom, iv.top) == mu, where + "closed form; ");
        c.expect(mobius_morse(fo, iv) == mu, where + "morse; ");
        c.expect(mobius_bruteforce(fo, iv) == mu, where + "brute force; ");
    };
    pat("1", "213546", 1, HomotopyType::sphere(2));
    pat("123", "21354", 1, HomotopyType::sphere(0));
    pat("12", "1234", 0, HomotopyType::contractible());
    word("b", "abb", 1);
    word("b", "aabb", 0);
    word("a", "aaa", 0);

    auto r = morse_report(pp, Interval<Permutation>{P("1"), P("213546")});
    c.expect(r.critical_chains.size() == 1 && r.chains[r.critical_chains.front()].j.size() == 3,
             "[1,213546] single critical chain with three J intervals; ");
}

void bijection(Check& c) {
    const Alphabet ab = Alphabet::parse("ab");
    c.expect(word_to_perm(ab.parse_word("abbab")) == P("165243"), "f(abbab); ");
    c.expect(word_to_perm(ab.parse_word("babab")) == P("615243"), "f(babab); ");
    c.expect(perm_to_word(P("12345")) == ab.parse_word("aaaa"), "f^-1(12345); ");
    c.expect(perm_to_word(P("15234")) == ab.parse_word("abaa"), "f^-1(15234); ");
    c.expect(perm_to_word(P("1")).empty(), "f^-1(1); ");
    for (std::size_t n = 2; n <= 7; ++n) {
        auto r = verify_isomorphism(n);
        c.expect(r.pass(), "verify n = " + std::to_string(n) + "; ");
    }
    for (std::size_t m = 1; m <= 8; ++m) {
        std::uint64_t count = 0;
        for (const auto& p : all_permutations(m))
            if (!oracle::contains_213_or_231(std::vector<int>(p.begin(), p.end()))) ++count;
        c.expect(count == (std::uint64_t{1} << (m - 1)), "avoider count m = " + std::to_string(m) + "; ");
    }
}

void poset_lex(Check& c) {
    std::size_t n = 0;
    PatternPoset pp;
    for (const auto& iv : all_pattern_intervals(6)) {
        ++n;
        c.expect(is_poset_lex(maximal_chains(pp, iv)), "[" + pp.format(iv.bottom) + "," + pp.format(iv.top) + "]; ");
    }
    for (std::size_t k : {2u, 3u}) {
        FactorOrder fo{Alphabet::first_letters(k)};
        for (const auto& iv : all_word_intervals(k, k == 2 ? 6 : 5)) {
            ++n;
            c.expect(is_poset_lex(maximal_chains(fo, iv)), "[" + fo.format(iv.bottom) + "," + fo.format(iv.top) + "]; ");
        }
    }
    c.notes << n << " intervals";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"Table of I(C)/J(C) for [1,213546] matches the golden file", table_reproduction},
        {"closed form = Morse = brute force = Euler on all pattern intervals, |top| <= 6", pattern_agreement},
        {"closed form = Morse = brute force on {a,b}* (|w| <= 6) and {a,b,c}* (|w| <= 5)", word_agreement},
        {"fast MSI rule equals brute-force minimal skipped intervals, |top| <= 6", msi_characterization},
        {"descent/ascent rules, at most one critical chain (the last), homotopy matches mu", structural_properties},
        {"point values of mu and homotopy types", point_values},
        {"bijection values, order isomorphism for n <= 7, avoider counts for m <= 8", bijection},
        {"chain-id order is poset lexicographic on every interval above", poset_lex},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.notes << "exception: " << e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << i + 1 << ' ' << criteria[i].first << " (" << c.notes.str()
                  << (c.notes.str().empty() ? "" : ", ") << ms << " ms)\n";
        if (!c.ok) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
