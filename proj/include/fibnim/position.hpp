#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibnim/ext_nat.hpp"

namespace fibnim {

/// Multiplier applied to a removal to get the next move bound.
enum class Dynamic : std::uint8_t {
    kPowerOfTwo = 1,  // next bound = s
    kFibonacci = 2,   // next bound = 2s
};

inline std::uint64_t multiplier(Dynamic d) { return static_cast<std::uint64_t>(d); }
Dynamic dynamic_from_int(int lambda);

enum class Outcome { kN, kP };

inline const char* to_string(Outcome o) { return o == Outcome::kN ? "N" : "P"; }

/// Remove `take` stones from the pile at `pile_index` (index into the sorted
/// pile list). `pile_size` is carried along so the move reads without the
/// position at hand.
struct Move {
    std::size_t pile_index = 0;
    std::uint64_t pile_size = 0;
    std::uint64_t take = 0;

    friend bool operator==(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);

/// A game state (n_1, ..., n_k; r) under a given move dynamic.
///
/// Piles are kept sorted ascending. The bound is stored as given; use
/// canonical_bound() for the option-preserving value min(r, max pile).
struct Position {
    std::vector<std::uint64_t> piles;
    ExtNat bound = kInf;
    Dynamic dynamic = Dynamic::kFibonacci;

    static Position make(std::vector<std::uint64_t> piles, ExtNat bound, Dynamic dynamic = Dynamic::kFibonacci);

    std::uint64_t max_pile() const;
    std::uint64_t total() const;

    /// min(bound, max pile); 0 when every pile is empty.
    std::uint64_t canonical_bound() const;
    Position canonical() const;

    /// Largest legal take from the given pile.
    std::uint64_t max_take(std::size_t pile_index) const;

    /// The move names an existing pile by index and size, and 1 <= take <= max_take.
    bool is_legal(const Move& m) const;

    /// Successor position; throws std::invalid_argument for an illegal move.
    Position after(const Move& m) const;

    /// Index of the first pile with the given size, or piles.size().
    std::size_t index_of(std::uint64_t size) const;

    std::string to_string() const;

    friend bool operator==(const Position&, const Position&) = default;
};

/// Every legal move, one per (distinct pile size, take); 1 <= take <=
/// min(bound, pile). Ordered by pile size, then take.
std::vector<Move> legal_moves(const Position& pos);

/// Parses "3,4,10" (order-insensitive, whitespace tolerated).
std::vector<std::uint64_t> parse_piles(const std::string& text);
std::string join_piles(const std::vector<std::uint64_t>& piles);

}  // namespace fibnim
