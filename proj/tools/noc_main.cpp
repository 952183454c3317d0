// noc: command-line toolkit for q-ary non-overlapping codes.
//
// Exit codes: 0 success, 1 semantic violation (overlap witness, failed
// assertion), 2 input error (parse failure, bad arguments), 3 budget
// (candidate cap or node budget exceeded).

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "noc/bounds.hpp"
#include "noc/code.hpp"
#include "noc/extension.hpp"
#include "noc/json_io.hpp"
#include "noc/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

noc::Code read_code(const std::string& path) {
    if (path == "-") return noc::parse_code(std::cin);
    std::ifstream in(path);
    if (!in) throw noc::ParseError("cannot open input file: " + path);
    return noc::parse_code(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw noc::ParseError("cannot open output file: " + path);
    out << text;
}

void emit_json(const noc::Json& j) { std::cout << j.dump(2) << "\n"; }

std::uint64_t candidate_cap_from_env() {
    const char* raw = std::getenv("NOCODE_CAP");
    if (!raw || !*raw) return noc::kDefaultCandidateCap;
    std::uint64_t value = 0;
    const char* end = raw + std::string(raw).size();
    const auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc() || ptr != end || value == 0)
        throw noc::ParseError("NOCODE_CAP must be a positive integer, got \"" +
                              std::string(raw) + "\"");
    return value;
}

int cmd_verify(const std::string& input, const std::string& format) {
    const noc::Code code = read_code(input);
    const auto witness = noc::find_overlap(code);
    if (format == "json") {
        emit_json(noc::verify_report_json(code, witness));
        return witness ? kExitViolation : kExitOk;
    }
    if (witness) {
        std::cout << "overlapping\n" << witness->describe(code.q()) << "\n";
        return kExitViolation;
    }
    std::cout << "non-overlapping\n"
              << "words: " << code.size() << "\n"
              << "prefix code: " << (noc::is_prefix_code(code) ? "yes" : "no") << "\n";
    return kExitOk;
}

int cmd_extend(const std::string& input, const std::string& output, bool force,
               const std::string& format) {
    const noc::Code code = read_code(input);
    const auto witness = noc::find_overlap(code);
    if (witness && !force) {
        std::cerr << "input is overlapping: " << witness->describe(code.q()) << "\n";
        return kExitViolation;
    }
    const noc::Code extended = noc::extend(code, force);
    const std::size_t predicted = noc::extension_size(code, force);

    std::ostream& info = output == "-" ? std::cerr : std::cout;
    if (format == "json") {
        noc::Json j;
        j["input_size"] = code.size();
        j["output_size"] = extended.size();
        j["predicted_size"] = predicted;
        j["n"] = extended.is_empty() ? 0 : extended.max_len();
        info << j.dump(2) << "\n";
    } else {
        info << "input size: " << code.size() << "\n"
             << "predicted size: " << predicted << "\n"
             << "output size: " << extended.size() << "\n";
    }
    write_text(output, noc::render_code(extended));

    // The size formula must agree with the constructed code whenever the
    // input really was non-overlapping; a mismatch means a library bug.
    if (!witness && predicted != extended.size()) {
        std::cerr << "invariant breach: predicted size " << predicted << " but built "
                  << extended.size() << " words\n";
        return kExitViolation;
    }
    return kExitOk;
}

noc::SearchConfig make_config(std::uint64_t budget, const std::string& strategy,
                              const std::string& engine, std::uint64_t cap) {
    noc::SearchConfig cfg;
    cfg.node_budget = budget;
    cfg.candidate_cap = cap;
    cfg.strategy = strategy == "exhaustive" ? noc::SearchStrategy::Exhaustive
                                            : noc::SearchStrategy::BranchAndBound;
    if (engine == "serial")
        cfg.mode = noc::EngineMode::Serial;
    else if (engine == "parallel")
        cfg.mode = noc::EngineMode::Parallel;
    else
        cfg.mode = noc::EngineMode::Auto;
    return cfg;
}

void print_search_text(const noc::SearchResult& r) {
    std::cout << "n: " << r.n << "\n"
              << "q: " << r.q << "\n"
              << "cardinality: " << r.cardinality << "\n"
              << "nodes expanded: " << r.nodes_expanded << "\n"
              << "elapsed ms: " << r.elapsed_ms << "\n"
              << "code:\n";
    for (const noc::Word& w : r.code.words()) std::cout << "  " << to_string(w, r.q) << "\n";
}

int report_search(const noc::SearchResult& r, const std::string& format,
                  const std::string& output, std::optional<std::size_t> fixed_card) {
    if (format == "json") {
        noc::Json j = noc::to_json(r);
        if (fixed_card) j["fixed_cardinality"] = *fixed_card;
        emit_json(j);
    } else {
        print_search_text(r);
        if (fixed_card) std::cout << "fixed-length cardinality: " << *fixed_card << "\n";
    }
    if (!output.empty()) write_text(output, noc::render_code(r.code));
    return kExitOk;
}

int cmd_search(bool variable, int n, int q, std::uint64_t budget, const std::string& strategy,
               const std::string& engine, const std::string& format, const std::string& output,
               bool check_fixed, std::uint64_t cap) {
    const noc::SearchConfig cfg = make_config(budget, strategy, engine, cap);
    try {
        const noc::SearchResult r =
            variable ? noc::max_variable(n, q, cfg) : noc::max_fixed(n, q, cfg);
        std::optional<std::size_t> fixed_card;
        if (variable && check_fixed) {
            fixed_card = noc::max_fixed(n, q, cfg).cardinality;
            if (r.cardinality > *fixed_card) {
                std::cerr << "violation: variable-length maximum " << r.cardinality
                          << " exceeds fixed-length maximum " << *fixed_card << "\n";
                return kExitViolation;
            }
        }
        return report_search(r, format, output, fixed_card);
    } catch (const noc::IncompleteSearchError& e) {
        std::cerr << e.what() << "; best lower bound found:\n";
        const noc::Json j = noc::to_json(e.best());
        std::cerr << j.dump(2) << "\n";
        return kExitBudget;
    }
}

int cmd_emit_code(const noc::Code& code, const std::string& output) {
    write_text(output, noc::render_code(code));
    return kExitOk;
}

int cmd_bounds(int n, int q, bool exact, int trivial_m, const std::string& format,
               std::uint64_t cap) {
    std::optional<noc::BigInt> exact_max;
    noc::SearchConfig cfg;
    cfg.candidate_cap = cap;
    if (exact) {
        const noc::SearchResult r = noc::max_fixed(n, q, cfg);
        exact_max = static_cast<unsigned long>(r.cardinality);
    }
    noc::BoundReport report = noc::bound_report(n, q, exact_max);
    if (trivial_m > 0) {
        std::map<int, noc::BigInt> per_length;
        for (int len = trivial_m; len <= n; ++len) {
            if (exact && noc::fixed_candidate_count(len, q, cap)) {
                per_length[len] = static_cast<unsigned long>(
                    noc::max_fixed(len, q, cfg).cardinality);
            } else {
                per_length[len] = noc::levenshtein_upper(len, q).floor_value;
            }
        }
        report.trivial_sum = noc::trivial_sum_upper(trivial_m, n, q, per_length);
        report.trivial_m = trivial_m;
        report.trivial_source = exact ? noc::BoundSource::Exact
                                      : noc::BoundSource::LevenshteinFloor;
    }
    if (format == "json") {
        emit_json(noc::to_json(report));
        return kExitOk;
    }
    std::cout << "n: " << report.n << "\n"
              << "q: " << report.q << "\n"
              << "levenshtein: " << noc::to_fraction_string(report.levenshtein_value) << "\n"
              << "levenshtein floor: " << report.levenshtein_floor.str() << "\n"
              << "classic lower: " << report.classic_lower.str() << "\n";
    if (report.exact_max) std::cout << "exact max: " << report.exact_max->str() << "\n";
    if (report.trivial_sum)
        std::cout << "trivial sum [" << report.trivial_m << ".." << report.n
                  << "]: " << report.trivial_sum->str() << " ("
                  << (report.trivial_source == noc::BoundSource::Exact ? "exact"
                                                                       : "levenshtein floor")
                  << ")\n";
    return kExitOk;
}

int cmd_stats(const std::string& input, const std::string& format) {
    const noc::Code code = read_code(input);
    const auto witness = noc::find_overlap(code);
    if (witness) {
        std::cerr << "input is overlapping: " << witness->describe(code.q()) << "\n";
        return kExitViolation;
    }
    const noc::LengthReport report = noc::length_report(code);
    if (format == "json") {
        emit_json(noc::to_json(report));
        return kExitOk;
    }
    std::cout << "size: " << report.code_size.str() << "\n"
              << "q: " << report.q << "\n"
              << "avg length: " << noc::to_fraction_string(report.avg_length) << "\n"
              << "entropy floor: " << report.entropy_floor << "\n"
              << "n: " << report.n << "\n"
              << "bracket low: " << report.bracket_low << "\n"
              << "trend holds: " << (report.trend_holds ? "yes" : "no") << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toolkit for q-ary non-overlapping (cross-bifix-free) codes"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string emit_output = "-"; // extend/maximal/classic: code file destination
    std::string search_output;     // max-fixed/max-variable: optional extra code file
    std::string format = "text";
    bool force = false;
    bool exact = false;
    bool check_fixed = false;
    int n = 0, q = 0, trivial_m = 0;
    std::uint64_t seed = 0, budget = 0;
    std::string strategy = "bnb";
    std::string engine = "auto";

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* verify = app.add_subcommand("verify", "Check a code file for overlaps");
    verify->add_option("input", input, "Code file ('-' for stdin)")->capture_default_str();
    add_format(verify);

    CLI::App* extend = app.add_subcommand("extend", "Extend a code to fixed length n");
    extend->add_option("input", input, "Code file ('-' for stdin)")->capture_default_str();
    extend->add_option("-o,--output", emit_output, "Output file ('-' for stdout)")
        ->capture_default_str();
    extend->add_flag("--force", force,
                     "Extend even if the input is overlapping (skips the size invariant)");
    add_format(extend);

    const auto add_search_opts = [&](CLI::App* sub) {
        sub->add_option("n", n, "Codeword length bound")->required();
        sub->add_option("q", q, "Alphabet size")->required();
        sub->add_option("--budget", budget, "Node budget (0 = unlimited)");
        sub->add_option("--strategy", strategy, "Search strategy")
            ->check(CLI::IsMember({"bnb", "exhaustive"}))
            ->capture_default_str();
        sub->add_option("--engine", engine, "Branch-and-bound engine")
            ->check(CLI::IsMember({"auto", "serial", "parallel"}))
            ->capture_default_str();
        sub->add_option("-o,--output", search_output,
                        "Also write the extremal code to this file");
        add_format(sub);
    };

    CLI::App* max_fixed = app.add_subcommand("max-fixed", "Maximum fixed-length code size");
    add_search_opts(max_fixed);

    CLI::App* max_variable =
        app.add_subcommand("max-variable", "Maximum variable-length code size");
    add_search_opts(max_variable);
    max_variable->add_flag("--check-fixed", check_fixed,
                           "Also compute the fixed-length maximum and assert the inequality");

    CLI::App* maximal = app.add_subcommand("maximal", "Greedily build a maximal code");
    maximal->add_option("n", n, "Maximum codeword length")->required();
    maximal->add_option("q", q, "Alphabet size")->required();
    maximal->add_option("--seed", seed, "Candidate-order seed (0 = canonical order)")
        ->capture_default_str();
    maximal->add_option("-o,--output", emit_output, "Output file ('-' for stdout)")
        ->capture_default_str();

    CLI::App* classic = app.add_subcommand("classic", "Emit the classic construction");
    classic->add_option("n", n, "Codeword length")->required();
    classic->add_option("q", q, "Alphabet size")->required();
    classic->add_option("-o,--output", emit_output, "Output file ('-' for stdout)")
        ->capture_default_str();

    CLI::App* bounds = app.add_subcommand("bounds", "Closed-form bounds for (n, q)");
    bounds->add_option("n", n, "Codeword length")->required();
    bounds->add_option("q", q, "Alphabet size")->required();
    bounds->add_flag("--exact", exact, "Compute the exact maximum by search");
    bounds->add_option("-m", trivial_m, "Also sum per-length maxima over [m, n]");
    add_format(bounds);

    CLI::App* stats = app.add_subcommand("stats", "Length statistics of a code file");
    stats->add_option("input", input, "Code file ('-' for stdin)")->capture_default_str();
    add_format(stats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        const std::uint64_t cap = candidate_cap_from_env();
        if (*verify) return cmd_verify(input, format);
        if (*extend) return cmd_extend(input, emit_output, force, format);
        if (*max_fixed)
            return cmd_search(false, n, q, budget, strategy, engine, format, search_output,
                              false, cap);
        if (*max_variable)
            return cmd_search(true, n, q, budget, strategy, engine, format, search_output,
                              check_fixed, cap);
        if (*maximal) return cmd_emit_code(noc::greedy_maximal(n, q, seed), emit_output);
        if (*classic) return cmd_emit_code(noc::classic_construction(n, q), emit_output);
        if (*bounds) return cmd_bounds(n, q, exact, trivial_m, format, cap);
        if (*stats) return cmd_stats(input, format);
    } catch (const noc::ParseError& e) {
        if (e.line() > 0)
            std::cerr << "parse error at line " << e.line() << ": " << e.what() << "\n";
        else
            std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const noc::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const noc::InvariantError& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return kExitViolation;
    } catch (const noc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
