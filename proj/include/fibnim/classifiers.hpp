#pragma once

// Closed-form outcome classifiers. Each one is cross-checked against the
// exhaustive Solver in the test and verify suites.

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "fibnim/ext_nat.hpp"
#include "fibnim/fib.hpp"
#include "fibnim/position.hpp"
#include "fibnim/word.hpp"

namespace fibnim {

// Classic one-pile game (first move may not take the whole pile) ------------

enum class ClassicWinner { kFirstPlayer, kSecondPlayer };

/// Second player wins iff n is a Fibonacci number. Requires n >= 1.
ClassicWinner classify_classic(std::uint64_t n);

/// The classic game as a position: (n; n-1), so (1; 0) for n = 1.
Position classic_position(std::uint64_t n);

// One pile --------------------------------------------------------------------

struct OnePileVerdict {
    Outcome outcome = Outcome::kP;
    std::optional<std::uint64_t> winning_take;  // z1(n) when N
    bool word_form_agrees = true;               // Zeckendorf and word tests agree
};

/// (n; r) is P iff z1(n) > r. Requires r >= 1.
OnePileVerdict classify_one_pile(std::uint64_t n, ExtNat r);

/// Word form: with F_t <= r < F_{t+1}, (n; r) is P iff n is a partial sum of
/// w_t. Uses enumerated partial sums, not the Zeckendorf criterion.
Outcome one_pile_word_outcome(std::uint64_t n, ExtNat r);

// Two piles, Zeckendorf form --------------------------------------------------

enum class TwoPileCaseTag { k1, k2, k3, k4a, k4b, k5a, k5b };

std::string to_string(TwoPileCaseTag tag);

/// Which case of the five-way classification applies, with its parameters.
/// s is set for case 4, d for case 5 (and for case 4 when z2(k) is finite).
struct TwoPileCase {
    TwoPileCaseTag tag = TwoPileCaseTag::k2;
    int t = 0;
    int s = 0;
    int d = 0;
};

struct TwoPileVerdict {
    Outcome outcome = Outcome::kP;
    TwoPileCase which;
};

/// F_t + F_{t+1} + ... + F_{t+count-1}, summed term by term.
std::uint64_t fib_run_sum(int t, int count);

/// Outcome of (m, m+k; r) for finite r >= 1. k = 0 falls into case 2 since
/// z1(0) is infinite.
TwoPileVerdict classify_two_pile_zeck(std::uint64_t m, std::uint64_t k, std::uint64_t r);

/// A winning move in (m, m+k; r) read off the case analysis, or nullopt for
/// P positions. Pile index 0 is the m pile, index 1 the m+k pile.
std::optional<Move> suggest_move_two_pile(std::uint64_t m, std::uint64_t k, std::uint64_t r);

// Two piles, word form --------------------------------------------------------

/// (m, m+k; r) is P iff k lies in sigma_m(alpha). m = 0 is treated as a
/// one-pile game, i.e. k in PS(w_t).
Outcome classify_two_pile_word(std::uint64_t m, std::uint64_t k, std::uint64_t r,
                               WordReading reading = {});

// (3, 4, n; inf) ----------------------------------------------------------------

struct ThreeFourVerdict {
    Outcome outcome = Outcome::kN;  // always N
    BeattyClass beatty = BeattyClass::kB2;
    Move move;                      // on Position::make({3, 4, n}, inf)
    Position successor;
};

ThreeFourVerdict classify_34n(std::uint64_t n);

// Power-of-two nim ------------------------------------------------------------

struct Pow2Verdict {
    Outcome outcome = Outcome::kP;
    std::optional<Move> move;  // removes sb(nim sum) from a nim-winning pile
};

/// (piles; r) under the lambda = 1 dynamic is P iff sb(nim sum) > r.
Pow2Verdict classify_pow2(std::span<const std::uint64_t> piles, ExtNat r);

}  // namespace fibnim
