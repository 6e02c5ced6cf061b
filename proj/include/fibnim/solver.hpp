#pragma once

// Exhaustive N/P solver for global-move-dynamic nim variants.
//
// Outcomes follow the usual recursion: a position is N iff some move reaches
// a P position. The solver exploits one structural fact: raising the move
// bound only adds options, so for a fixed multiset of piles there is a
// threshold T (the smallest winning take) with
//
//     (piles; r) in N  <=>  r >= T.
//
// T is memoized per (sorted nonempty piles, dynamic), which collapses the
// bound dimension entirely. T(piles) is the least s such that removing s
// from some pile reaches a child with lambda*s < T(child); it is infinite
// when no such s exists, i.e. when the position is P even with an unlimited
// bound.

#include <array>
#include <cstdint>
#include <mutex>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "fibnim/ext_nat.hpp"
#include "fibnim/position.hpp"

namespace fibnim {

/// Memo budget exhausted. The memo is left consistent; no partial answer is
/// ever returned.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// engine_move() on a position with no legal move.
class GameOver : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolverOptions {
    /// Maximum number of memo entries across both dynamics.
    std::size_t memo_budget = 50'000'000;
};

/// Reads FIBNIM_MEMO_BUDGET when set, else the default.
SolverOptions solver_options_from_env();

/// Thread-safe: every public call takes an internal lock, so one solver can
/// be shared by concurrent sessions. Results never depend on call order.
class Solver {
public:
    /// Piles are packed as 16-bit fields, at most this many nonempty ones.
    static constexpr std::size_t kMaxPiles = 8;
    static constexpr std::uint64_t kMaxPileSize = 0xFFFF;

    explicit Solver(SolverOptions options = {});

    Outcome outcome(const Position& pos);

    /// All moves to P positions, in legal_moves() order. Empty iff P.
    std::vector<Move> winning_moves(const Position& pos);

    /// Smallest bound at which the piles are an N position; infinite when
    /// they are P under any bound.
    ExtNat min_winning_take(std::span<const std::uint64_t> piles, Dynamic dynamic);

    std::size_t memo_size() const;
    std::size_t memo_budget() const { return options_.memo_budget; }
    void clear();

private:
    using Key = std::array<std::uint16_t, kMaxPiles>;  // sorted ascending, zero padded in front

    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };

    using Memo = std::unordered_map<Key, std::uint32_t, KeyHash>;

    static constexpr std::uint32_t kInfThreshold = 0xFFFFFFFFu;

    static Key make_key(std::span<const std::uint64_t> piles);
    Memo& memo_for(Dynamic d) { return d == Dynamic::kFibonacci ? fib_memo_ : pow2_memo_; }

    std::uint32_t threshold(const Key& root, Dynamic dynamic);
    bool is_p_locked(const Position& pos);

    SolverOptions options_;
    mutable std::mutex mu_;
    Memo fib_memo_;
    Memo pow2_memo_;
};

// Complementary values ------------------------------------------------------

/// Outcome of searching b = 0, 1, ..., cap for (piles, b; inf) in P.
struct ComplementResult {
    bool found = false;
    std::uint64_t value = 0;  // b when found, otherwise the cap searched

    friend bool operator==(const ComplementResult&, const ComplementResult&) = default;
};

/// Smallest b <= cap with (piles, b; inf) in P (there is at most one).
/// Requires cap >= max pile.
ComplementResult complementary_value(Solver& solver, std::span<const std::uint64_t> piles, std::uint64_t cap);

struct TableEntry {
    enum class Kind { kValue, kNoComplement, kUnknown };
    Kind kind = Kind::kUnknown;
    std::uint64_t value = 0;  // b for kValue, the cap for kUnknown

    std::string to_string() const;  // "35", "inf", "?>1000"
    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

/// Complementary values of two-pile positions (i, j) for 0 <= i, j <= max_n.
/// The pair {3, 4} is reported as none-by-theorem without searching.
struct CompTable {
    std::uint64_t max_n = 0;
    std::uint64_t cap = 0;
    std::vector<TableEntry> cells;  // row-major, (max_n+1)^2

    const TableEntry& at(std::uint64_t i, std::uint64_t j) const { return cells[i * (max_n + 1) + j]; }
};

CompTable comp_table(Solver& solver, std::uint64_t max_n, std::uint64_t cap);

/// Engine policy: the first winning move in (pile size, take) order, or take
/// one stone from the largest pile when the position is P. Throws GameOver
/// when there is no legal move.
Move engine_move(Solver& solver, const Position& pos);

}  // namespace fibnim
