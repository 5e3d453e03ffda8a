#ifndef RANEY_TOOLS_CLI_HPP
#define RANEY_TOOLS_CLI_HPP

// Command-line front end: count, enumerate, map, verify, identities.
// Exit status: 0 success, 1 verification failure, 2 invalid input.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "raney/raney.hpp"

namespace raney::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_invalid = 2;

inline constexpr const char* budget_env = "RANEY_BUDGET";

struct Options {
    std::int64_t k = 0;
    std::optional<std::int64_t> l;
    std::int64_t n = 0;
    bool have_k = false;
    bool have_n = false;
    bool proper = false;
    std::string kind = "sequences";
    std::string format = "json";
    std::string direction;
    std::string suite = "all";
    std::string seq, tuple, path, word, out_file;
    std::optional<std::uint64_t> budget;
};

namespace detail {

inline std::uint64_t resolve_budget(const Options& o) {
    if (o.budget)
        return *o.budget;
    if (const char* env = std::getenv(budget_env)) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size())
                return v;
        } catch (const std::exception&) {
        }
        throw error(errc::invalid_parameter, std::string(budget_env) + " is not a non-negative integer");
    }
    return default_budget;
}

inline void require(bool present, const char* flag, const std::string& cmd) {
    if (!present)
        throw error(errc::invalid_parameter, cmd + " requires " + flag);
}

inline void require_format(const Options& o, std::initializer_list<const char*> allowed, const std::string& what) {
    for (const char* f : allowed)
        if (o.format == f)
            return;
    throw error(errc::invalid_parameter, "format " + o.format + " is not available for " + what);
}

// Reads the object for `map` from its flag or, when absent, one line of stdin.
inline std::string input_or_stdin(const std::string& flag_value, std::istream& in) {
    if (!flag_value.empty())
        return flag_value;
    std::string line;
    if (!std::getline(in, line) || line.find_first_not_of(" \t\r") == std::string::npos)
        throw error(errc::invalid_parameter, "no input object given on the command line or standard input");
    return line;
}

// When --l is omitted the sequence decides: l = s_n - kn, the smallest l
// for which it is a (k,l)-threshold sequence.
inline ThresholdSequence sequence_arg(const Options& o, const std::string& text) {
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '{')
        return sequence_from_json(parse_json(text));
    auto values = parse_csv_ints(text);
    const auto n = static_cast<std::int64_t>(values.size());
    const std::int64_t l = o.l ? *o.l : std::max<std::int64_t>(0, values.empty() ? 0 : values.back() - o.k * n);
    return validate(std::move(values), ThresholdParams{o.k, l, n, 0});
}

inline ExtMotzkinPath path_arg(const Options& o, const std::string& text) {
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '{')
        return path_from_json(parse_json(text));
    require(o.have_k, "--k", "a CSV path");
    return ExtMotzkinPath::make(o.k, parse_csv_ints(text));
}

inline void write_sequence(const Options& o, const ThresholdSequence& s, std::ostream& out) {
    if (o.format == "csv")
        out << to_csv(s.values()) << '\n';
    else
        out << to_json(s).dump() << '\n';
}

inline void write_path(const Options& o, const ExtMotzkinPath& p, std::ostream& out) {
    if (o.format == "csv")
        out << to_csv(p.rises()) << '\n';
    else if (o.format == "ascii")
        out << render_ascii(p) << '\n';
    else
        out << to_json(p).dump() << '\n';
}

inline int cmd_count(const Options& o, std::ostream& out) {
    require(o.have_k, "--k", "count");
    require(o.have_n, "--n", "count");
    const ThresholdParams p{o.k, o.l.value_or(0), o.n, 0};
    if (o.proper && o.n < 1)
        throw error(errc::invalid_parameter, "--proper needs n >= 1");
    out << (o.proper ? count_proper(p) : count(p)).str() << '\n';
    return exit_ok;
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
    require(o.have_k, "--k", "enumerate");
    require(o.have_n, "--n", "enumerate");
    const std::uint64_t budget = resolve_budget(o);
    const std::int64_t l = o.l.value_or(0);
    if (o.kind == "sequences") {
        require_format(o, {"json", "csv"}, "sequences");
        enumerate(ThresholdParams{o.k, l, o.n, 0}, [&](const ThresholdSequence& s) { write_sequence(o, s, out); },
                  budget);
    } else if (o.kind == "trees") {
        require_format(o, {"json", "dot"}, "trees");
        std::int64_t idx = 0;
        enumerate_trees(
            o.k, o.n,
            [&](const KaryTree& t) {
                if (o.format == "dot")
                    out << to_dot(t, std::nullopt, "tree" + std::to_string(idx++));
                else
                    out << to_json(t).dump() << '\n';
            },
            budget);
    } else if (o.kind == "tuples") {
        require_format(o, {"json"}, "tuples");
        check_params(ThresholdParams{o.k, l, 1, 0});
        enumerate_tuples(o.k, l + 1, o.n, [&](const TreeTuple& t) { out << to_json(t).dump() << '\n'; }, budget);
    } else if (o.kind == "paths") {
        require_format(o, {"json", "csv", "ascii"}, "paths");
        enumerate_paths(o.k, l, o.n, [&](const ExtMotzkinPath& p) { write_path(o, p, out); }, budget);
    } else {
        throw error(errc::invalid_parameter, "unknown --kind " + o.kind);
    }
    return exit_ok;
}

inline int cmd_map(const Options& o, std::istream& in, std::ostream& out) {
    const auto& dir = o.direction;
    if (dir == "seq-to-trees") {
        require(o.have_k, "--k", dir);
        require_format(o, {"json", "dot"}, dir);
        const auto s = sequence_arg(o, input_or_stdin(o.seq, in));
        const auto tuple = tuple_of(s);
        if (o.format == "json") {
            out << to_json(tuple).dump() << '\n';
            return exit_ok;
        }
        // DOT: each non-trivial entry with the w-labeling used by the bijection.
        std::int64_t consumed = 0;
        for (std::int64_t y = tuple.l() + 1; y >= 1; --y) {
            const auto& t = tuple.trees[static_cast<std::size_t>(y - 1)];
            if (t.is_trivial())
                continue;
            const std::int64_t w = o.k * (s.size() - consumed) + y - 1;
            out << to_dot(t, w, "position" + std::to_string(y));
            consumed += t.internal_count();
        }
        return exit_ok;
    }
    if (dir == "trees-to-seq") {
        require(o.have_k, "--k", dir);
        require_format(o, {"json", "csv"}, dir);
        const auto tuple = tuple_from_json(parse_json(input_or_stdin(o.tuple, in)), o.k);
        write_sequence(o, sequence_of_tuple(tuple), out);
        return exit_ok;
    }
    if (dir == "seq-to-path") {
        require(o.have_k, "--k", dir);
        require_format(o, {"json", "csv", "ascii"}, dir);
        write_path(o, path_of(sequence_arg(o, input_or_stdin(o.seq, in))), out);
        return exit_ok;
    }
    if (dir == "path-to-seq") {
        require_format(o, {"json", "csv"}, dir);
        const auto p = path_arg(o, input_or_stdin(o.path, in));
        write_sequence(o, sequence_of_path(p, o.l.value_or(p.end_height())), out);
        return exit_ok;
    }
    if (dir == "seq-to-ballot") {
        require(o.have_k, "--k", dir);
        require_format(o, {"json", "csv"}, dir);
        const auto w = to_ballot(sequence_arg(o, input_or_stdin(o.seq, in)));
        if (o.format == "json")
            out << to_json(w).dump() << '\n';
        else
            out << w.letters << '\n';
        return exit_ok;
    }
    if (dir == "ballot-to-seq") {
        require(o.have_k, "--k", dir);
        require_format(o, {"json", "csv"}, dir);
        const BallotWord w{o.k, input_or_stdin(o.word, in)};
        std::int64_t l = 0;
        if (o.l) {
            l = *o.l;
        } else {
            // Smallest l that fits: #A - 1 = s_n, #B = n.
            l = std::max<std::int64_t>(0, w.count_a() - 1 - o.k * w.count_b());
        }
        write_sequence(o, from_ballot(w, o.k, l), out);
        return exit_ok;
    }
    throw error(errc::invalid_parameter, "unknown map direction '" + dir + "'");
}

inline int emit(const VerifyReport& r, std::ostream& out) {
    out << to_json(r).dump() << '\n';
    return r.passed() ? exit_ok : exit_failed;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    const std::uint64_t budget = resolve_budget(o);
    int status = exit_ok;
    const auto track = [&](int s) { status = std::max(status, s); };
    const bool all = o.suite == "all";
    if (!all && o.suite != "counts" && o.suite != "bijections" && o.suite != "ballot")
        throw error(errc::invalid_parameter, "unknown verify suite " + o.suite);

    std::vector<GridCell> cells;
    if (o.have_k || o.have_n) {
        require(o.have_k && o.have_n, "--k and --n", "verify on a single cell");
        check_params(ThresholdParams{o.k, o.l.value_or(0), o.n, 0});
        cells.push_back({o.k, o.l.value_or(0), o.n});
    } else {
        cells = count_grid(2, 5, ExactInt(budget));
    }
    if (all || o.suite == "counts")
        for (const auto& c : cells)
            track(emit(check_sequence_counts(c.k, c.l, c.n, budget), out));
    if (all || o.suite == "bijections")
        for (const auto& c : cells)
            track(emit(check_bijections(c.k, c.l, c.n, budget), out));
    if (all || o.suite == "ballot") {
        const auto m = measure_ballot_claim(2, 3, 6, budget);
        const auto j = to_json(m);
        if (!o.out_file.empty()) {
            std::ofstream file(o.out_file);
            if (!file)
                throw error(errc::invalid_parameter, "cannot write " + o.out_file);
            file << j.dump(2) << '\n';
        }
        out << j.dump() << '\n';
        track(m.roundtrip.passed() ? exit_ok : exit_failed);
    }
    return status;
}

inline int cmd_identities(const Options& o, std::ostream& out) {
    const auto& s = o.suite;
    const bool all = s == "all";
    bool known = all;
    int status = exit_ok;
    const auto run = [&](const char* name, auto&& fn) {
        if (all || s == name) {
            known = true;
            status = std::max(status, emit(fn(), out));
        }
    };
    run("closed-forms", [] { return check_closed_forms(6, 12, 10); });
    run("ternary-recurrences", [] { return check_ternary_recurrences(25); });
    run("ternary-difference", [] { return check_ternary_difference(40); });
    run("catalan-pow2", [] { return check_catalan_pow2(60); });
    run("rational-identities", [] { return check_rational_identities(50); });
    run("raney-difference", [] {
        VerifyReport merged{"raney-difference", {}, {}};
        for (std::int64_t k = 3; k <= 6; ++k)
            for (std::int64_t l = 1; l <= k - 2; ++l)
                merged.merge(check_raney_difference(k, l, 30));
        return merged;
    });
    run("oeis", [] { return check_oeis_prefixes(); });
    if (!known)
        throw error(errc::invalid_parameter, "unknown identities suite " + s);
    return status;
}

} // namespace detail

// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Threshold sequences, k-ary tree tuples and extended Motzkin paths counted by Raney numbers",
                 "raney"};
    app.require_subcommand(1);
    Options o;

    const auto add_params = [&](CLI::App* sub) {
        sub->add_option_function<std::int64_t>("--k", [&](std::int64_t v) { o.k = v; o.have_k = true; }, "arity k >= 2");
        sub->add_option_function<std::int64_t>("--l", [&](std::int64_t v) { o.l = v; }, "0 <= l <= k-2");
        sub->add_option_function<std::int64_t>("--n", [&](std::int64_t v) { o.n = v; o.have_n = true; }, "length / internal nodes");
    };
    const auto add_budget = [&](CLI::App* sub) {
        sub->add_option_function<std::uint64_t>("--budget", [&](std::uint64_t v) { o.budget = v; },
                                                std::string("object cap (default 10^6, env ") + budget_env + ")");
    };

    auto* count_cmd = app.add_subcommand("count", "Number of (k,l)-threshold sequences of length n");
    add_params(count_cmd);
    count_cmd->add_flag("--proper", o.proper, "count only proper sequences");

    auto* enum_cmd = app.add_subcommand("enumerate", "Stream every object, one per line");
    add_params(enum_cmd);
    add_budget(enum_cmd);
    enum_cmd->add_option("--kind", o.kind)->check(CLI::IsMember({"sequences", "trees", "tuples", "paths"}));
    enum_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "dot", "ascii"}));

    auto* map_cmd = app.add_subcommand("map", "Apply one bijection to one object");
    map_cmd->add_option("direction", o.direction, "seq-to-trees | trees-to-seq | seq-to-path | path-to-seq | "
                                                  "seq-to-ballot | ballot-to-seq")
        ->required();
    add_params(map_cmd);
    map_cmd->add_option("--seq", o.seq, "comma-separated values or sequence JSON");
    map_cmd->add_option("--tuple", o.tuple, "tuple JSON");
    map_cmd->add_option("--path", o.path, "path JSON or comma-separated rises");
    map_cmd->add_option("--word", o.word, "ballot word over {A,B}");
    map_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "dot", "ascii"}));

    auto* verify_cmd = app.add_subcommand("verify", "Run enumeration, bijection and ballot suites");
    add_params(verify_cmd);
    add_budget(verify_cmd);
    verify_cmd->add_option("--suite", o.suite, "counts | bijections | ballot | all");
    verify_cmd->add_option("--out", o.out_file, "write the ballot measurement JSON here");

    auto* ident_cmd = app.add_subcommand("identities", "Run the exact identity suites");
    ident_cmd->add_option("--suite", o.suite,
                          "closed-forms | ternary-recurrences | ternary-difference | catalan-pow2 | rational-identities | raney-difference | oeis | all");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }

    try {
        if (count_cmd->parsed())
            return detail::cmd_count(o, out);
        if (enum_cmd->parsed())
            return detail::cmd_enumerate(o, out);
        if (map_cmd->parsed())
            return detail::cmd_map(o, in, out);
        if (verify_cmd->parsed())
            return detail::cmd_verify(o, out);
        return detail::cmd_identities(o, out);
    } catch (const error& e) {
        out.flush();
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }
}

} // namespace raney::cli

#endif // RANEY_TOOLS_CLI_HPP
