// One PASS/FAIL line per acceptance criterion. Each criterion runs its
// verify suites on a fresh solver and must also finish within its time
// limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "fibnim/verify.hpp"

namespace {

struct Criterion {
    const char* name;
    std::vector<std::string> suites;
    double limit_seconds;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {"complement table, 256 cells, cap 1000", {"complement-table"}, 300},
        {"one pile: classifier equals solver, n <= 500", {"one-pile"}, 30},
        {"two piles: Zeckendorf and word forms equal solver, m<=60 k<=120 r<=60", {"two-pile", "word-reading"}, 600},
        {"(3,4,n) in N for n <= 300, Beatty partition to 1000", {"three-four", "beatty"}, 60},
        // Four positions at 120 s each; the two long ones only run with --long.
        {"large complementary positions are P", {"large-complements"}, 480},
        {"power-of-two dynamic, 3 piles <= 40, r <= 40 and inf", {"pow2"}, 60},
        {"word constructions, nesting, shift, reference hybrid words",
         {"words", "ps-nesting", "ps-shift", "hybrid-examples"},
         60},
        {"small-take bound and telescoping identity", {"small-take-bound", "telescoping"}, 60},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    fibnim::VerifyOptions opts;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--long") == 0) {
            opts.long_run = true;
        } else {
            std::fprintf(stderr, "usage: %s [--long]\n", argv[0]);
            return 2;
        }
    }

    int failures = 0;
    for (const auto& c : criteria()) {
        fibnim::Solver solver;
        bool ok = true;
        std::string why;
        const auto start = std::chrono::steady_clock::now();
        try {
            for (const auto& suite : c.suites) {
                const auto report = fibnim::run_suite(suite, solver, opts);
                for (const auto& check : report.checks) {
                    if (!check.passed) {
                        ok = false;
                        why += " [" + suite + "/" + check.name + ": " + check.detail + "]";
                    }
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            why += std::string(" [error: ") + e.what() + "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            ok = false;
            why += " [over time limit]";
        }
        failures += ok ? 0 : 1;
        std::printf("%s  %-75s %8.2fs (limit %.0fs)%s\n", ok ? "PASS" : "FAIL", c.name, secs, c.limit_seconds,
                    why.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria().size()) - failures, criteria().size());
    return failures == 0 ? 0 : 1;
}
