#include <doctest.h>

#include <cstdlib>
#include <random>
#include <thread>

#include "fibnim/solver.hpp"
#include "reference_solver.hpp"

using namespace fibnim;

namespace {

std::uint64_t naive_bound(const ExtNat& r) { return r.is_inf() ? testing_oracle::NaiveSolver::kInf : r.value(); }

}  // namespace

TEST_CASE("position basics") {
    auto pos = Position::make({10, 3, 4}, kInf);
    CHECK(pos.piles == std::vector<std::uint64_t>{3, 4, 10});
    CHECK(pos.to_string() == "(3,4,10; inf)");
    CHECK(pos.canonical_bound() == 10);
    CHECK(pos.max_take(0) == 3);
    CHECK(pos.index_of(4) == 1);
    CHECK(pos.index_of(5) == 3);

    const auto next = pos.after(Move{2, 10, 4});
    CHECK(next.piles == std::vector<std::uint64_t>{3, 4, 6});
    CHECK(next.bound == ExtNat{8});
    CHECK(pos.after(Move{2, 10, 4}).dynamic == Dynamic::kFibonacci);

    auto pow2 = Position::make({5}, ExtNat{4}, Dynamic::kPowerOfTwo);
    CHECK(pow2.after(Move{0, 5, 3}).bound == ExtNat{3});

    CHECK_THROWS_AS(pos.after(Move{0, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(pos.after(Move{0, 4, 1}), std::invalid_argument);
    CHECK_THROWS_AS(pos.after(Move{0, 3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Position::make({5}, ExtNat{2}).after(Move{0, 5, 3}), std::invalid_argument);

    CHECK(Position::make({0, 0}, ExtNat{7}).canonical_bound() == 0);
    CHECK(dynamic_from_int(1) == Dynamic::kPowerOfTwo);
    CHECK_THROWS(dynamic_from_int(3));
}

TEST_CASE("parse_piles") {
    CHECK(parse_piles("3,4,10") == std::vector<std::uint64_t>{3, 4, 10});
    CHECK(parse_piles(" 10, 3 ,4") == std::vector<std::uint64_t>{3, 4, 10});
    CHECK(parse_piles("0") == std::vector<std::uint64_t>{0});
    CHECK_THROWS(parse_piles(""));
    CHECK_THROWS(parse_piles("3,,4"));
    CHECK_THROWS(parse_piles("3,-4"));
    CHECK_THROWS(parse_piles("a"));
    CHECK(join_piles({3, 4, 10}) == "3,4,10");
}

TEST_CASE("legal moves") {
    CHECK(legal_moves(Position::make({0, 0}, ExtNat{5})).empty());
    CHECK(legal_moves(Position::make({3}, ExtNat{2})) == std::vector<Move>{{0, 3, 1}, {0, 3, 2}});
    CHECK(legal_moves(Position::make({1, 4}, kInf)).size() == 5);
    CHECK(legal_moves(Position::make({4, 4}, kInf)).size() == 4);  // equal piles collapse
    CHECK(legal_moves(Position::make({4}, ExtNat{0})).empty());
}

TEST_CASE("outcome examples") {
    Solver s;
    CHECK(s.outcome(Position::make({0, 0, 0}, ExtNat{9})) == Outcome::kP);
    CHECK(s.outcome(Position::make({}, kInf)) == Outcome::kP);
    CHECK(s.outcome(Position::make({13}, ExtNat{12})) == Outcome::kP);
    CHECK(s.outcome(Position::make({8, 9, 53}, kInf)) == Outcome::kP);
    CHECK(s.outcome(Position::make({1, 47, 72}, kInf)) == Outcome::kP);

    CHECK(s.winning_moves(Position::make({10}, ExtNat{2})) == std::vector<Move>{{0, 10, 2}});
    CHECK(s.winning_moves(Position::make({13}, ExtNat{12})).empty());
    CHECK_FALSE(s.winning_moves(Position::make({3, 4, 5}, kInf)).empty());
}

TEST_CASE("thresholds") {
    Solver s;
    const std::uint64_t ten[] = {10};
    const std::uint64_t thirteen[] = {13};
    const std::uint64_t pair[] = {5, 5};
    CHECK(s.min_winning_take(ten, Dynamic::kFibonacci) == ExtNat{2});
    CHECK(s.min_winning_take(thirteen, Dynamic::kFibonacci) == ExtNat{13});
    CHECK(s.min_winning_take(pair, Dynamic::kFibonacci).is_inf());
    CHECK(s.min_winning_take(std::span<const std::uint64_t>{}, Dynamic::kFibonacci).is_inf());
}

TEST_CASE("solver agrees with the naive recursion") {
    Solver s;
    testing_oracle::NaiveSolver naive;
    for (int lambda : {1, 2}) {
        const auto dyn = dynamic_from_int(lambda);
        for (std::uint64_t a = 0; a <= 9; ++a) {
            for (std::uint64_t b = a; b <= 9; ++b) {
                for (std::uint64_t c = b; c <= 12; ++c) {
                    std::vector<ExtNat> bounds{kInf};
                    for (std::uint64_t r = 0; r <= 13; ++r) bounds.emplace_back(r);
                    for (const auto& r : bounds) {
                        const auto pos = Position::make({a, b, c}, r, dyn);
                        const bool p = naive.is_p({a, b, c}, naive_bound(r), lambda);
                        REQUIRE((s.outcome(pos) == Outcome::kP) == p);

                        std::vector<std::pair<std::uint64_t, std::uint64_t>> got;
                        for (const auto& m : s.winning_moves(pos)) got.emplace_back(m.pile_size, m.take);
                        REQUIRE(got == naive.winning({a, b, c}, naive_bound(r), lambda));
                    }
                }
            }
        }
    }
}

TEST_CASE("bound canonicalization keeps outcomes") {
    Solver s;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 3000; ++i) {
        std::vector<std::uint64_t> piles(1 + rng() % 3);
        for (auto& p : piles) p = rng() % 30;
        const ExtNat r = rng() % 5 == 0 ? kInf : ExtNat{1 + rng() % 70};
        const auto pos = Position::make(piles, r, rng() % 2 ? Dynamic::kFibonacci : Dynamic::kPowerOfTwo);
        REQUIRE(s.outcome(pos) == s.outcome(pos.canonical()));
        REQUIRE(legal_moves(pos) == legal_moves(pos.canonical()));
    }
}

TEST_CASE("memo budget") {
    Solver tiny(SolverOptions{5});
    CHECK_THROWS_AS(tiny.outcome(Position::make({30, 40}, kInf)), BudgetExceeded);
    CHECK(tiny.memo_size() <= 5);
    CHECK(tiny.memo_budget() == 5);

    Solver roomy;
    CHECK(roomy.outcome(Position::make({30, 40}, kInf)) == Outcome::kN);
    roomy.clear();
    CHECK(roomy.memo_size() == 0);
}

TEST_CASE("memo budget from the environment") {
    setenv("FIBNIM_MEMO_BUDGET", "1234", 1);
    CHECK(solver_options_from_env().memo_budget == 1234);
    setenv("FIBNIM_MEMO_BUDGET", "lots", 1);
    CHECK_THROWS_AS(solver_options_from_env(), std::invalid_argument);
    unsetenv("FIBNIM_MEMO_BUDGET");
    CHECK(solver_options_from_env().memo_budget == 50'000'000);
}

TEST_CASE("solver input limits") {
    Solver s;
    CHECK_THROWS_AS(s.outcome(Position::make({1, 1, 1, 1, 1, 1, 1, 1, 1}, kInf)), std::out_of_range);
    CHECK_THROWS_AS(s.outcome(Position::make({70000}, ExtNat{3})), std::out_of_range);
    // Empty piles do not count towards the pile limit.
    CHECK(s.outcome(Position::make({0, 0, 1, 1, 1, 1, 1, 1, 1, 1}, kInf)) == Outcome::kP);
}

TEST_CASE("shared solver under concurrent queries") {
    std::vector<Position> positions;
    std::mt19937_64 rng(11);
    for (int i = 0; i < 400; ++i) {
        positions.push_back(Position::make({rng() % 25, rng() % 25, rng() % 40}, ExtNat{1 + rng() % 30}));
    }
    Solver reference;
    std::vector<Outcome> expected;
    for (const auto& p : positions) expected.push_back(reference.outcome(p));

    Solver shared;
    std::vector<int> mismatches(4, 0);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] {
            for (std::size_t i = t; i < positions.size() * 2; i += 3) {
                const auto k = i % positions.size();
                mismatches[t] += shared.outcome(positions[k]) != expected[k];
            }
        });
    }
    for (auto& th : threads) th.join();
    for (int m : mismatches) CHECK(m == 0);
}

TEST_CASE("complementary values") {
    Solver s;
    const std::uint64_t five_six[] = {5, 6};
    CHECK(complementary_value(s, five_six, 100) == ComplementResult{true, 35});
    for (std::uint64_t n = 0; n <= 20; ++n) {
        const std::uint64_t same[] = {n, n};
        CHECK(complementary_value(s, same, 100) == ComplementResult{true, 0});
    }
    const std::uint64_t three_four[] = {3, 4};
    CHECK(complementary_value(s, three_four, 200) == ComplementResult{false, 200});
    CHECK_THROWS_AS(complementary_value(s, five_six, 5), std::invalid_argument);
}

TEST_CASE("complement table cells") {
    Solver s;
    const auto t = comp_table(s, 15, 1000);
    for (std::uint64_t j = 0; j <= 15; ++j) {
        CHECK(t.at(0, j) == TableEntry{TableEntry::Kind::kValue, j});
    }
    CHECK(t.at(9, 14).value == 76);
    CHECK(t.at(15, 11).value == 88);
    CHECK(t.at(4, 15).value == 69);
    CHECK(t.at(8, 9).value == 53);
    CHECK(t.at(3, 4).kind == TableEntry::Kind::kNoComplement);
    CHECK(t.at(4, 3).to_string() == "inf");
    CHECK(TableEntry{TableEntry::Kind::kUnknown, 1000}.to_string() == "?>1000");

    const auto small = comp_table(s, 15, 20);
    CHECK(small.at(9, 14).kind == TableEntry::Kind::kUnknown);
    CHECK(small.at(9, 14).to_string() == "?>20");
}

TEST_CASE("engine policy") {
    Solver s;
    CHECK(engine_move(s, Position::make({10}, ExtNat{2})) == Move{0, 10, 2});
    CHECK(engine_move(s, Position::make({13}, ExtNat{12})) == Move{0, 13, 1});
    const auto pos = Position::make({3, 4, 6}, kInf);
    CHECK(s.outcome(pos.after(engine_move(s, pos))) == Outcome::kP);
    CHECK_THROWS_AS(engine_move(s, Position::make({0}, kInf)), GameOver);
}
