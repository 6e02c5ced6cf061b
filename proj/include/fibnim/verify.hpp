#pragma once

// Named verification suites. Each suite checks one family of properties
// against the exhaustive solver or an enumeration and returns a report; the
// CLI, the acceptance binary and the Python module all run these.

#include <cstdint>
#include <string>
#include <vector>

#include "fibnim/solver.hpp"

namespace fibnim {

struct VerifyOptions {
    bool long_run = false;

    std::uint64_t zeck_max = 10'000;
    std::uint64_t zeck_subset_max = 200;
    std::uint64_t small_take_max = 10'000;
    int telescope_max_t = 20;
    int telescope_max_s = 20;
    std::uint64_t beatty_max = 1'000;

    std::size_t word_length = 10'000;
    std::uint64_t ps_bound = 10'000;
    int ps_max_level = 12;

    std::uint64_t one_pile_max_n = 500;
    std::uint64_t consistency_max_n = 10'000;
    std::uint64_t consistency_max_r = 1'000;

    std::uint64_t two_pile_max_m = 60;
    std::uint64_t two_pile_max_k = 120;
    std::uint64_t two_pile_max_r = 60;

    std::uint64_t table_max_n = 15;
    std::uint64_t table_cap = 1'000;

    std::uint64_t three_four_max_n = 300;
    std::uint64_t families_max_n = 200;

    std::uint64_t pow2_max_pile = 40;
    std::uint64_t pow2_max_r = 40;
    std::size_t pow2_max_piles = 3;

    std::uint64_t unique_max_pile = 15;
    std::uint64_t unique_cap = 200;
    std::uint64_t mirror_max_m = 100;

    std::size_t random_samples = 2'000;
    std::uint64_t seed = 20240611;
};

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0;

    bool passed() const;
};

/// All suite names, in a stable order.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws std::invalid_argument for an unknown name and lets
/// BudgetExceeded propagate.
SuiteReport run_suite(const std::string& name, Solver& solver, const VerifyOptions& opts = {});

/// Two-pile positions (i, j), i <= j <= max_n, with no complementary value
/// up to `cap`, other than the known pair (3, 4).
std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs_without_complement(Solver& solver, std::uint64_t max_n,
                                                                               std::uint64_t cap);

}  // namespace fibnim
