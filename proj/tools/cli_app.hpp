#pragma once

// Command-line front end. run() is separate from main() so the test suite can
// drive every subcommand in-process and inspect output and exit codes.
//
// Exit codes: 0 success, 1 invariant mismatch, 2 incomparable or otherwise
// invalid input interval, 3 parse error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <posetmorse/posetmorse.hpp>

namespace posetmorse::cli {

enum ExitCode : int { ok = 0, mismatch = 1, incomparable = 2, parse_failure = 3 };

struct RunConfig {
    std::string poset = "pattern";
    std::string alphabet = "ab";
    std::optional<std::size_t> max_size;
    std::string format = "table";
    std::string cache_path;
    unsigned jobs = 0;
    bool force = false;
};

namespace detail {

inline void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

inline std::unique_ptr<MobiusCache> open_cache(const RunConfig& cfg) {
    std::string path = cfg.cache_path;
    if (path.empty())
        if (const char* env = std::getenv("POSET_MORSE_CACHE")) path = env;
    if (path.empty()) return nullptr;
    return std::make_unique<MobiusCache>(path);
}

template <ChainPoset P>
int mobius(const P& poset, const RunConfig& cfg, const std::string& b, const std::string& t, std::ostream& out) {
    Interval<ElementOf<P>> iv{poset.parse(b), poset.parse(t)};
    validate(poset, iv);
    auto cache = open_cache(cfg);
    std::int64_t closed = 0;
    if constexpr (std::is_same_v<P, PatternPoset>)
        closed = mobius_pattern(iv.bottom, iv.top);
    else
        closed = mobius_factor(iv.bottom, iv.top);
    const auto morse = mobius_morse(poset, iv);
    const auto brute = cache ? mobius_bruteforce(poset, iv, *cache) : mobius_bruteforce(poset, iv);
    std::optional<std::int64_t> euler;
    if (poset.rank(iv.top) - poset.rank(iv.bottom) >= 2) euler = euler_characteristic(poset, iv).value;
    const bool agree = closed == brute && morse == brute && (!euler || *euler == brute);

    if (cfg.format == "json") {
        emit_json(out, {{"poset", std::string(poset.tag())},
                        {"bottom", poset.format(iv.bottom)},
                        {"top", poset.format(iv.top)},
                        {"closed_form", closed},
                        {"morse", morse},
                        {"brute_force", brute},
                        {"euler", euler ? nlohmann::json(*euler) : nlohmann::json(nullptr)},
                        {"agree", agree}});
    } else {
        out << "interval     " << interval_text(poset, iv) << " (" << poset.tag() << ")\n";
        out << "closed-form  " << closed << '\n';
        out << "morse        " << morse << '\n';
        out << "brute-force  " << brute << '\n';
        out << "euler        " << (euler ? std::to_string(*euler) : std::string("n/a (rank gap < 2)")) << '\n';
        out << (agree ? "mu           " + std::to_string(brute) : std::string("DISAGREEMENT")) << '\n';
    }
    return agree ? ok : mismatch;
}

template <ChainPoset P>
int chains(const P& poset, const RunConfig& cfg, const std::string& b, const std::string& t, std::ostream& out) {
    Interval<ElementOf<P>> iv{poset.parse(b), poset.parse(t)};
    auto cs = maximal_chains(poset, iv);
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : cs) {
            auto j = chain_json(poset, c);
            nlohmann::json steps = nlohmann::json::array();
            for (auto s : classify_steps(c)) steps.push_back(to_string(s));
            j["steps"] = std::move(steps);
            arr.push_back(std::move(j));
        }
        emit_json(out, {{"poset", std::string(poset.tag())},
                        {"bottom", poset.format(iv.bottom)},
                        {"top", poset.format(iv.top)},
                        {"chains", std::move(arr)}});
        return ok;
    }
    out << chain_table_header(poset.rank(iv.top) - poset.rank(iv.bottom)) << '\n';
    for (const auto& c : cs) out << chain_table_row(poset, c, {}) << '\n';
    out << cs.size() << " maximal chains, poset lexicographic order: " << (is_poset_lex(cs) ? "yes" : "no") << '\n';
    return ok;
}

template <ChainPoset P>
int morse(const P& poset, const RunConfig& cfg, const std::string& b, const std::string& t, std::ostream& out) {
    Interval<ElementOf<P>> iv{poset.parse(b), poset.parse(t)};
    auto report = morse_report(poset, iv);
    if (cfg.format == "json") {
        emit_json(out, to_json(poset, report));
        return ok;
    }
    out << morse_table(poset, report) << '\n';
    out << "critical chains:";
    for (auto idx : report.critical_chains)
        out << ' ' << chain_id(report.chains[idx].chain.labels) << " (d=" << *report.chains[idx].critical.dimension << ')';
    if (report.critical_chains.empty()) out << " none";
    out << "\nmobius: " << report.mobius << '\n';
    out << "homotopy: " << (report.homotopy ? to_string(*report.homotopy) : std::string("degenerate (rank gap < 2)")) << '\n';
    return ok;
}

template <ChainPoset P>
int homotopy(const P& poset, const RunConfig& cfg, const std::string& b, const std::string& t, std::ostream& out) {
    Interval<ElementOf<P>> iv{poset.parse(b), poset.parse(t)};
    validate(poset, iv);
    std::optional<HomotopyType> h;
    if (poset.rank(iv.top) - poset.rank(iv.bottom) >= 2) h = homotopy_type(poset, iv);
    if (cfg.format == "json") {
        emit_json(out, {{"poset", std::string(poset.tag())},
                        {"bottom", poset.format(iv.bottom)},
                        {"top", poset.format(iv.top)},
                        {"homotopy", h ? to_json(*h) : nlohmann::json(nullptr)}});
    } else {
        out << (h ? to_string(*h) : std::string("degenerate (rank gap < 2)")) << '\n';
    }
    return ok;
}

inline int report_crosscheck(const CrosscheckReport& r, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.format == "json") {
        emit_json(out, to_json(r));
    } else {
        std::size_t critical = 0, contractible = 0;
        for (const auto& rec : r.records) {
            critical += rec.critical_count;
            if (rec.homotopy && rec.homotopy->kind == HomotopyType::Kind::Contractible) ++contractible;
        }
        out << "poset        " << r.poset << '\n';
        out << "max size     " << r.max_size << '\n';
        out << "intervals    " << r.records.size() << '\n';
        out << "critical     " << critical << " critical chains in total\n";
        out << "contractible " << contractible << '\n';
        out << "mismatches   " << r.mismatches.size() << '\n';
    }
    for (const auto& m : r.mismatches)
        err << "mismatch [" << m.check << "] [" << m.bottom << "," << m.top << "]: " << m.detail << '\n';
    return r.mismatches.empty() ? ok : mismatch;
}

}  // namespace detail

/// Parses and runs one command line. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Möbius functions and homotopy types of intervals in the consecutive pattern poset and factor order",
                 "posetmorse"};
    app.require_subcommand(1);
    app.add_option("--poset", cfg.poset, "Poset: pattern or factor")->check(CLI::IsMember({"pattern", "factor"}));
    app.add_option("--alphabet", cfg.alphabet, "Factor-order alphabet, e.g. ab or x,y,z");
    app.add_option("--max-size", cfg.max_size, "Largest top element for exhaustive commands");
    app.add_option("--format", cfg.format, "Output format: table or json")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--cache", cfg.cache_path, "Möbius cache file (default: $POSET_MORSE_CACHE)");
    app.add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)");
    app.add_flag("--force", cfg.force, "Lift the size guardrails");

    std::string bottom, top;
    auto interval_cmd = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help)->fallthrough();
        sub->add_option("bottom", bottom, "Bottom element")->required();
        sub->add_option("top", top, "Top element")->required();
        return sub;
    };
    auto* c_mobius = interval_cmd("mobius", "Möbius value by every applicable method");
    auto* c_chains = interval_cmd("chains", "Maximal chains with chain ids and embeddings");
    auto* c_morse = interval_cmd("morse-report", "I(C), J(C), critical chains, Möbius value and homotopy type");
    auto* c_homotopy = interval_cmd("homotopy", "Homotopy type of the order complex");

    auto* c_bij = app.add_subcommand("bijection", "Words over {a,b} <-> permutations avoiding 213 and 231")->fallthrough();
    c_bij->require_subcommand(1);
    std::string bij_arg;
    std::size_t verify_n = 7;
    auto* c_map = c_bij->add_subcommand("map", "Word to permutation")->fallthrough();
    c_map->add_option("word", bij_arg)->required();
    auto* c_unmap = c_bij->add_subcommand("unmap", "Permutation to word")->fallthrough();
    c_unmap->add_option("permutation", bij_arg)->required();
    auto* c_verify = c_bij->add_subcommand("verify", "Exhaustive order-isomorphism check")->fallthrough();
    c_verify->add_option("n", verify_n, "Largest permutation length");

    auto* c_cross = app.add_subcommand("crosscheck", "Run every method and invariant over all intervals")->fallthrough();
    auto* c_table1 = app.add_subcommand("table1", "Reproduce the I(C)/J(C) table of [1,213546]")->fallthrough();
    auto* c_iso = app.add_subcommand("iso-search", "Search factor-order intervals isomorphic to pattern intervals")
                      ->fallthrough();
    std::size_t pattern_cap = 4, word_cap = 4;
    c_iso->add_option("--pattern-cap", pattern_cap, "Largest pattern top");
    c_iso->add_option("--word-cap", word_cap, "Largest word top");

    std::vector<std::string> argv_store{"posetmorse"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return parse_failure;
    }

    try {
        const PatternPoset patterns{cfg.force};
        const FactorOrder words{Alphabet::parse(cfg.alphabet), cfg.force};
        const bool factor = cfg.poset == "factor";
        auto dispatch = [&](auto&& fn) { return factor ? fn(words) : fn(patterns); };

        if (c_mobius->parsed())
            return dispatch([&](const auto& p) { return detail::mobius(p, cfg, bottom, top, out); });
        if (c_chains->parsed())
            return dispatch([&](const auto& p) { return detail::chains(p, cfg, bottom, top, out); });
        if (c_morse->parsed())
            return dispatch([&](const auto& p) { return detail::morse(p, cfg, bottom, top, out); });
        if (c_homotopy->parsed())
            return dispatch([&](const auto& p) { return detail::homotopy(p, cfg, bottom, top, out); });

        if (c_map->parsed()) {
            auto w = FactorOrder{}.parse(bij_arg);
            auto p = word_to_perm(w);
            if (cfg.format == "json")
                detail::emit_json(out, {{"word", FactorOrder{}.format(w)}, {"permutation", to_string(p)}});
            else
                out << to_string(p) << '\n';
            return ok;
        }
        if (c_unmap->parsed()) {
            auto p = parse_permutation(bij_arg);
            auto w = perm_to_word(p);
            if (cfg.format == "json")
                detail::emit_json(out, {{"permutation", to_string(p)}, {"word", FactorOrder{}.format(w)}});
            else
                out << FactorOrder{}.format(w) << '\n';
            return ok;
        }
        if (c_verify->parsed()) {
            if (cfg.max_size && c_verify->count("n") == 0) verify_n = *cfg.max_size;
            auto r = verify_isomorphism(verify_n, cfg.jobs, cfg.force);
            if (cfg.format == "json") {
                nlohmann::json bad = nlohmann::json::array();
                for (const auto& [u, w] : r.counterexamples)
                    bad.push_back({FactorOrder{}.format(u), FactorOrder{}.format(w)});
                detail::emit_json(out, {{"n", r.max_length},
                                        {"pairs_checked", r.pairs_checked},
                                        {"avoider_counts", r.avoider_counts},
                                        {"images_match", r.images_match},
                                        {"counterexamples", bad},
                                        {"pass", r.pass()}});
            } else {
                out << "word pairs checked  " << r.pairs_checked << '\n';
                out << "counterexamples     " << r.counterexamples.size() << '\n';
                for (std::size_t m = 1; m <= r.avoider_counts.size(); ++m)
                    out << "avoiders in S_" << m << "       " << r.avoider_counts[m - 1] << " (expected "
                        << (std::uint64_t{1} << (m - 1)) << ")\n";
                out << (r.pass() ? "pass" : "FAIL") << '\n';
            }
            return r.pass() ? ok : mismatch;
        }
        if (c_cross->parsed()) {
            auto cache = detail::open_cache(cfg);
            const std::size_t cap = cfg.max_size.value_or(factor ? 6 : 5);
            auto r = factor ? crosscheck_words(words.alphabet(), cap, cfg.jobs, cfg.force, cache.get())
                            : crosscheck_patterns(cap, cfg.jobs, cfg.force, cache.get());
            return detail::report_crosscheck(r, cfg, out, err);
        }
        if (c_table1->parsed()) {
            if (cfg.format == "json") {
                PatternPoset p;
                detail::emit_json(out, to_json(p, morse_report(p, {parse_permutation("1"), parse_permutation("213546")})));
            } else {
                out << table1();
            }
            return ok;
        }
        if (c_iso->parsed()) {
            auto cat = iso_search(pattern_cap, word_cap, words.alphabet(), cfg.jobs, cfg.force);
            if (cfg.format == "json") {
                detail::emit_json(out, to_json(cat));
            } else {
                for (const auto& m : cat.entries) {
                    out << '[' << m.pattern_bottom << ',' << m.pattern_top << "]\t";
                    if (m.word_interval)
                        out << '[' << m.word_interval->first << ',' << m.word_interval->second << "]\n";
                    else
                        out << "unmatched\n";
                }
                out << cat.matched() << " of " << cat.entries.size() << " pattern intervals matched\n";
            }
            return ok;
        }
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << '\n';
        return parse_failure;
    } catch (const incomparable_error& e) {
        err << "incomparable: " << e.what() << '\n';
        return incomparable;
    } catch (const domain_error& e) {
        err << "invalid input: " << e.what() << '\n';
        return incomparable;
    } catch (const guardrail_error& e) {
        err << "guardrail: " << e.what() << '\n';
        return incomparable;
    } catch (const error& e) {
        err << "internal error: " << e.what() << '\n';
        return mismatch;
    }
    return ok;
}

}  // namespace posetmorse::cli
