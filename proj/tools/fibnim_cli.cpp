// fibnim: analyze positions, dump words, reproduce the complementary-value
// table, run verification suites and serve the play API.

#include <csignal>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibnim/classifiers.hpp"
#include "fibnim/fib.hpp"
#include "fibnim/record.hpp"
#include "fibnim/server.hpp"
#include "fibnim/solver.hpp"
#include "fibnim/verify.hpp"
#include "fibnim/word.hpp"

namespace {

using namespace fibnim;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct ClassifierVerdict {
    std::string name;
    Outcome outcome;
};

// Every closed-form classifier that applies to the position.
std::vector<ClassifierVerdict> applicable_classifiers(const Position& pos) {
    std::vector<ClassifierVerdict> out;
    const auto& p = pos.piles;
    if (pos.bound == ExtNat{0}) {
        return out;
    }
    if (pos.dynamic == Dynamic::kPowerOfTwo) {
        out.push_back({"pow2", classify_pow2(p, pos.bound).outcome});
        return out;
    }
    if (p.size() == 1) {
        const auto v = classify_one_pile(p[0], pos.bound);
        out.push_back({"one-pile", v.outcome});
        out.push_back({"one-pile-word", one_pile_word_outcome(p[0], pos.bound)});
    }
    if (p.size() == 2 && pos.bound.is_finite()) {
        const auto r = pos.bound.value();
        const auto z = classify_two_pile_zeck(p[0], p[1] - p[0], r);
        out.push_back({"two-pile-zeck(case " + to_string(z.which.tag) + ")", z.outcome});
        out.push_back({"two-pile-word", classify_two_pile_word(p[0], p[1] - p[0], r)});
    }
    if (p.size() == 3 && pos.bound.is_inf()) {
        // (3, 4, n) with n anywhere in the sorted order.
        for (std::size_t i = 0; i < 3; ++i) {
            std::vector<std::uint64_t> rest;
            for (std::size_t j = 0; j < 3; ++j) {
                if (j != i) rest.push_back(p[j]);
            }
            if (rest == std::vector<std::uint64_t>{3, 4}) {
                out.push_back({"three-four", classify_34n(p[i]).outcome});
                break;
            }
        }
    }
    return out;
}

int cmd_analyze(const std::string& piles_text, const std::string& bound_text, int dyn, const std::string& format) {
    const auto pos = Position::make(parse_piles(piles_text), ExtNat::parse(bound_text), dynamic_from_int(dyn));
    Solver solver(solver_options_from_env());
    OutcomeRecord rec{pos, solver.outcome(pos), solver.winning_moves(pos), "oracle"};
    const auto verdicts = applicable_classifiers(pos);
    bool agree = true;
    for (const auto& v : verdicts) {
        agree = agree && v.outcome == rec.outcome;
    }

    if (format == "json") {
        json cls = json::array();
        for (const auto& v : verdicts) {
            cls.push_back({{"name", v.name}, {"outcome", to_string(v.outcome)}, {"agrees", v.outcome == rec.outcome}});
        }
        std::cout << json{{"record", to_json(rec)}, {"classifiers", cls}, {"agree", agree}}.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "source,outcome,moves\n";
        std::string moves;
        for (const auto& m : rec.winning_moves) {
            moves += (moves.empty() ? "" : ";") + std::to_string(m.pile_size) + ":" + std::to_string(m.take);
        }
        std::cout << "oracle," << to_string(rec.outcome) << "," << moves << '\n';
        for (const auto& v : verdicts) {
            std::cout << v.name << "," << to_string(v.outcome) << ",\n";
        }
    } else {
        std::cout << "position  " << pos.to_string()
                  << (pos.dynamic == Dynamic::kPowerOfTwo ? "  power-of-two nim" : "  Fibonacci nim") << '\n';
        std::cout << "oracle    " << to_string(rec.outcome) << '\n';
        if (rec.winning_moves.empty()) {
            std::cout << "moves     none\n";
        }
        for (const auto& m : rec.winning_moves) {
            std::cout << "move      " << to_string(m) << " -> " << pos.after(m).to_string() << '\n';
        }
        if (pos.piles.size() == 1 && pos.piles[0] > 0 && pos.bound == ExtNat{pos.piles[0] - 1} &&
            pos.dynamic == Dynamic::kFibonacci) {
            const bool second = classify_classic(pos.piles[0]) == ClassicWinner::kSecondPlayer;
            std::cout << "classic   " << (second ? "second player wins (Fibonacci pile)" : "first player wins") << '\n';
        }
        for (const auto& v : verdicts) {
            std::cout << "classify  " << v.name << ": " << to_string(v.outcome)
                      << (v.outcome == rec.outcome ? " (agrees)" : " (DISAGREES)") << '\n';
        }
        std::cout << to_line(rec) << '\n';
    }
    return agree ? kExitOk : kExitFailure;
}

int cmd_comp_table(std::uint64_t max_n, std::uint64_t cap, const std::string& format) {
    Solver solver(solver_options_from_env());
    const auto table = comp_table(solver, max_n, cap);
    if (format == "json") {
        json rows = json::array();
        for (std::uint64_t i = 0; i <= max_n; ++i) {
            json row = json::array();
            for (std::uint64_t j = 0; j <= max_n; ++j) {
                row.push_back(table.at(i, j).to_string());
            }
            rows.push_back(row);
        }
        std::cout << json{{"max_n", max_n}, {"cap", cap}, {"rows", rows}}.dump(2) << '\n';
        return kExitOk;
    }
    const char sep = format == "csv" ? ',' : '\t';
    std::cout << (format == "csv" ? "" : " ");
    for (std::uint64_t j = 0; j <= max_n; ++j) {
        std::cout << sep << j;
    }
    std::cout << '\n';
    for (std::uint64_t i = 0; i <= max_n; ++i) {
        std::cout << i;
        for (std::uint64_t j = 0; j <= max_n; ++j) {
            std::cout << sep << table.at(i, j).to_string();
        }
        std::cout << '\n';
    }
    return kExitOk;
}

int cmd_abstract_word(std::size_t length, const std::string& format) {
    const auto w = fib_word_concat(length);
    if (format == "json") {
        std::cout << json{{"word", "abstract"}, {"letters", w}}.dump() << '\n';
        return kExitOk;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::cout << (i ? (format == "csv" ? "," : " ") : "") << w[i];
    }
    std::cout << '\n';
    return kExitOk;
}

int cmd_word(std::optional<int> sturm, const std::string& hybrid, std::optional<std::size_t> length,
             std::optional<std::uint64_t> bound, bool ps, const std::string& format) {
    WordSpec spec;
    if (sturm) {
        spec = SturmSpec{*sturm};
    } else {
        std::istringstream is(hybrid);
        std::uint64_t m = 0;
        std::uint64_t r = 0;
        char comma = 0;
        if (!(is >> m >> comma >> r) || comma != ',' || !(is >> std::ws).eof()) {
            throw CLI::ValidationError("--hybrid", "expects m,r");
        }
        spec = sigma_params(m, r).word;
    }
    auto stream = make_stream(spec);

    std::vector<std::uint64_t> out;
    if (ps) {
        out = stream.partial_sums(bound.value_or(0));
        if (length && out.size() > *length) {
            out.resize(*length);
        }
    } else if (length) {
        out = stream.values(*length);
    } else {
        // Letters while the running sum stays within the bound.
        std::uint64_t sum = 0;
        for (std::size_t i = 0;; ++i) {
            sum += stream.value_at(i);
            if (sum > *bound) break;
            out.push_back(stream.value_at(i));
        }
    }

    if (format == "json") {
        std::cout << json{{"word", describe(spec)}, {ps ? "partial_sums" : "letters", out}}.dump() << '\n';
        return kExitOk;
    }
    if (format == "text") {
        std::cerr << describe(spec) << '\n';
    }
    const char* sep = (ps || format == "csv") ? "," : " ";
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::cout << (i ? sep : "") << out[i];
    }
    std::cout << '\n';
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& suites, const VerifyOptions& opts, const std::string& format) {
    Solver solver(solver_options_from_env());
    std::vector<std::string> names = suites;
    if (names.empty() || (names.size() == 1 && names[0] == "all")) {
        names = suite_names();
    }
    bool ok = true;
    json reports = json::array();
    for (const auto& n : names) {
        const auto rep = run_suite(n, solver, opts);
        ok = ok && rep.passed();
        if (format == "json") {
            json checks = json::array();
            for (const auto& c : rep.checks) {
                checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            }
            reports.push_back({{"suite", rep.suite}, {"passed", rep.passed()}, {"seconds", rep.seconds}, {"checks", checks}});
            continue;
        }
        std::cout << (rep.passed() ? "PASS " : "FAIL ") << rep.suite << " (" << rep.seconds << " s)\n";
        for (const auto& c : rep.checks) {
            std::cout << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.detail << '\n';
        }
    }
    if (format == "json") {
        std::cout << json{{"passed", ok}, {"suites", reports}}.dump(2) << '\n';
    }
    return ok ? kExitOk : kExitFailure;
}

PlayServer* g_server = nullptr;

void on_signal(int) {
    if (g_server != nullptr) {
        g_server->stop();
    }
}

int cmd_serve(const ServerOptions& sopts, std::uint64_t max_pile) {
    Solver solver(solver_options_from_env());
    SessionStoreOptions store_opts;
    store_opts.max_pile_size = max_pile;
    SessionStore store(solver, store_opts);
    PlayServer server(store, sopts);
    const int port = server.bind();
    g_server = &server;
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    std::cerr << "serving on http://" << sopts.host << ":" << port << '\n';
    server.serve();
    g_server = nullptr;
    return kExitOk;
}

int cmd_missing_complements(std::uint64_t max_n, std::uint64_t cap, const std::string& format) {
    Solver solver(solver_options_from_env());
    const auto pairs = pairs_without_complement(solver, max_n, cap);
    if (format == "json") {
        json arr = json::array();
        for (auto [i, j] : pairs) {
            arr.push_back({i, j});
        }
        std::cout << json{{"max_n", max_n}, {"cap", cap}, {"pairs", arr}}.dump(2) << '\n';
    } else {
        std::cout << "pairs (i <= j <= " << max_n << ") other than (3,4) with no complementary value up to "
                  << cap << ": " << pairs.size() << '\n';
        for (auto [i, j] : pairs) {
            std::cout << i << "," << j << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Global-move-dynamic Fibonacci nim and power-of-two nim"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

    std::string piles;
    std::string bound = "inf";
    int dyn = 2;
    auto* analyze = app.add_subcommand("analyze", "Solve a position and compare with the classifiers");
    analyze->add_option("--piles", piles, "Comma-separated pile sizes")->required();
    analyze->add_option("--bound", bound, "Move bound: a number or inf");
    analyze->add_option("--dynamic", dyn, "2 = Fibonacci nim, 1 = power-of-two nim")->check(CLI::IsMember({1, 2}));

    std::uint64_t max_n = 15;
    std::uint64_t cap = 1000;
    auto* table = app.add_subcommand("comp-table", "Complementary values of two-pile positions");
    table->add_option("--max-n", max_n, "Largest pile in the table");
    table->add_option("--cap", cap, "Largest value searched");

    std::optional<int> sturm;
    std::string hybrid;
    std::optional<std::size_t> length;
    std::optional<std::uint64_t> word_bound;
    bool ps = false;
    bool abstract = false;
    auto* word = app.add_subcommand("word", "Print a Fibonacci word or its partial sums");
    auto* o_sturm = word->add_option("--sturm", sturm, "Level a of w_a")->check(CLI::Range(1, 91));
    auto* o_hybrid = word->add_option("--hybrid", hybrid, "m,r: the word classifying (m, m+k; r)");
    o_sturm->excludes(o_hybrid);
    auto* o_len = word->add_option("--length", length, "Number of letters");
    auto* o_bound = word->add_option("--bound", word_bound, "Stop once the running sum exceeds this");
    word->add_flag("--ps", ps, "Print partial sums (including 0) instead of letters");
    auto* o_abstract = word->add_flag("--abstract", abstract, "Print the word over {x, y}");
    o_abstract->excludes(o_sturm)->excludes(o_hybrid)->needs(o_len);

    std::vector<std::string> suites;
    VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify", "Run verification suites (default: all)");
    verify->add_option("suite", suites, "Suite names, or all")->check(CLI::IsMember([] {
        auto names = suite_names();
        names.push_back("all");
        return names;
    }()));
    verify->add_flag("--long", vopts.long_run, "Include the slow checks");
    verify->add_option("--m", vopts.two_pile_max_m, "Two-pile grid: largest m");
    verify->add_option("--k", vopts.two_pile_max_k, "Two-pile grid: largest k");
    verify->add_option("--r", vopts.two_pile_max_r, "Two-pile grid: largest r");
    verify->add_option("--n", vopts.one_pile_max_n, "One-pile grid: largest n");
    verify->add_option("--bound", vopts.ps_bound, "Partial-sum bound for word suites");
    verify->add_option("--length", vopts.word_length, "Word length for construction agreement");
    verify->add_option("--cap", vopts.table_cap, "Complementary value search cap");
    verify->add_option("--seed", vopts.seed, "Seed for sampled checks");

    ServerOptions sopts;
    std::uint64_t max_pile = 1000;
    auto* serve = app.add_subcommand("serve", "Serve the play API and UI");
    serve->add_option("--host", sopts.host, "Address to bind");
    serve->add_option("--port", sopts.port, "Port (0 picks one)");
    serve->add_option("--static-dir", sopts.static_dir, "Directory with the built UI");
    serve->add_option("--snapshot", sopts.snapshot_path, "Session snapshot file");
    serve->add_option("--max-pile", max_pile, "Largest pile accepted for a new game");

    std::uint64_t q_max_n = 30;
    std::uint64_t q_cap = 1000;
    auto* experiment = app.add_subcommand("experiment", "Exploratory searches");
    auto* missing = experiment->add_subcommand("missing-complements", "Two-pile positions without a complementary value");
    experiment->require_subcommand(1);
    missing->add_option("--max-n", q_max_n, "Largest pile");
    missing->add_option("--cap", q_cap, "Largest value searched");

    try {
        app.parse(argc, argv);
        if (*word && !sturm && hybrid.empty() && !abstract) {
            throw CLI::ValidationError("word", "one of --sturm or --hybrid is required");
        }
        if (*word && o_len->count() == 0 && o_bound->count() == 0) {
            throw CLI::ValidationError("word", "one of --length or --bound is required");
        }
        if (*word && ps && !word_bound) {
            throw CLI::ValidationError("--ps", "requires --bound");
        }
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze) return cmd_analyze(piles, bound, dyn, format);
        if (*table) return cmd_comp_table(max_n, cap, format);
        if (*word && abstract) return cmd_abstract_word(*length, format);
        if (*word) return cmd_word(sturm, hybrid, length, word_bound, ps, format);
        if (*verify) return cmd_verify(suites, vopts, format);
        if (*serve) return cmd_serve(sopts, max_pile);
        if (*missing) return cmd_missing_complements(q_max_n, q_cap, format);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
