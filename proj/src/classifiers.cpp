#include "fibnim/classifiers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fibnim {
namespace {

// Enumerated partial sums of w_t, grown on demand and shared across calls.
class SturmSumCache {
public:
    bool contains(int level, std::uint64_t n) {
        std::lock_guard lock(mu_);
        auto& entry = sums_[level];
        if (entry.members.empty() || entry.bound < n) {
            const std::uint64_t bound = std::max<std::uint64_t>({n, entry.bound * 2, 1024});
            entry.members = ps_set(level, bound).members;
            entry.bound = bound;
        }
        return std::binary_search(entry.members.begin(), entry.members.end(), n);
    }

private:
    struct Entry {
        std::uint64_t bound = 0;
        std::vector<std::uint64_t> members;
    };
    std::mutex mu_;
    std::map<int, Entry> sums_;
};

SturmSumCache& sturm_cache() {
    static SturmSumCache cache;
    return cache;
}

constexpr int kMaxTwoPileT = 88;

}  // namespace

ClassicWinner classify_classic(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("classify_classic: the pile must be nonempty");
    }
    return fib_index_of(n) >= 0 ? ClassicWinner::kSecondPlayer : ClassicWinner::kFirstPlayer;
}

Position classic_position(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("classic_position: the pile must be nonempty");
    }
    return Position::make({n}, ExtNat{n - 1});
}

OnePileVerdict classify_one_pile(std::uint64_t n, ExtNat r) {
    if (r == ExtNat{0}) {
        throw std::invalid_argument("classify_one_pile: r must be >= 1");
    }
    OnePileVerdict v;
    const ExtNat smallest = z1(n);
    if (n == 0 || smallest > r) {
        v.outcome = Outcome::kP;
    } else {
        v.outcome = Outcome::kN;
        v.winning_take = smallest.value();
    }
    v.word_form_agrees = one_pile_word_outcome(n, r) == v.outcome;
    return v;
}

Outcome one_pile_word_outcome(std::uint64_t n, ExtNat r) {
    if (r.is_inf()) {
        return n == 0 ? Outcome::kP : Outcome::kN;
    }
    const int t = fib_bracket(r.value());
    return sturm_cache().contains(t, n) ? Outcome::kP : Outcome::kN;
}

std::string to_string(TwoPileCaseTag tag) {
    switch (tag) {
        case TwoPileCaseTag::k1: return "1";
        case TwoPileCaseTag::k2: return "2";
        case TwoPileCaseTag::k3: return "3";
        case TwoPileCaseTag::k4a: return "4a";
        case TwoPileCaseTag::k4b: return "4b";
        case TwoPileCaseTag::k5a: return "5a";
        case TwoPileCaseTag::k5b: return "5b";
    }
    return "?";
}

std::uint64_t fib_run_sum(int t, int count) {
    std::uint64_t s = 0;
    for (int i = 0; i < count; ++i) {
        s += fib(t + i);
    }
    return s;
}

TwoPileVerdict classify_two_pile_zeck(std::uint64_t m, std::uint64_t k, std::uint64_t r) {
    if (r == 0) {
        throw std::invalid_argument("classify_two_pile_zeck: r must be >= 1");
    }
    const int t = fib_bracket(r);
    if (t > kMaxTwoPileT) {
        throw std::out_of_range("classify_two_pile_zeck: r too large");
    }
    TwoPileVerdict v;
    v.which.t = t;
    const ExtNat first = z1(k);

    if (first <= ExtNat{fib(t)}) {
        v.which.tag = TwoPileCaseTag::k1;
        v.outcome = Outcome::kN;
        return v;
    }
    if (first >= ExtNat{fib(t + 2)}) {
        v.which.tag = TwoPileCaseTag::k2;
        v.outcome = Outcome::kP;
        return v;
    }
    // From here on z1(k) = F_{t+1}.
    if (m < fib(t)) {
        v.which.tag = TwoPileCaseTag::k3;
        v.outcome = Outcome::kP;
        return v;
    }

    const ExtNat second = z_k(k, 2);
    int d = 0;
    if (second.is_finite()) {
        d = fib_index_of(second.value()) - t;  // >= 3
        v.which.d = d;
    }
    if (second.is_inf() || m < fib_run_sum(t, d - 2)) {
        int s = 1;
        while (t + s <= kMaxFibIndex && fib_run_sum(t, s + 1) <= m) {
            ++s;
        }
        v.which.s = s;
        const bool odd = (s % 2) != 0;
        v.which.tag = odd ? TwoPileCaseTag::k4a : TwoPileCaseTag::k4b;
        v.outcome = odd ? Outcome::kN : Outcome::kP;
        return v;
    }
    const bool odd = (d % 2) != 0;
    v.which.tag = odd ? TwoPileCaseTag::k5a : TwoPileCaseTag::k5b;
    v.outcome = odd ? Outcome::kN : Outcome::kP;
    return v;
}

std::optional<Move> suggest_move_two_pile(std::uint64_t m, std::uint64_t k, std::uint64_t r) {
    const auto verdict = classify_two_pile_zeck(m, k, r);
    if (verdict.outcome == Outcome::kP) {
        return std::nullopt;
    }
    const std::uint64_t larger = m + k;
    if (verdict.which.tag == TwoPileCaseTag::k1) {
        const std::uint64_t first = z1(k).value();
        const int e = fib_index_of(first);
        const ExtNat second = z_k(k, 2);
        // Removing z1(k) from the larger pile wins unless z2(k) = F_{e+2}
        // and m >= F_{e+1}; then F_{e-1} comes off the smaller pile.
        if (second == ExtNat{fib(e + 2)} && m >= fib(e + 1)) {
            return Move{0, m, fib(e - 1)};
        }
        return Move{1, larger, first};
    }
    // Cases 4a and 5a: step down the chain by removing F_t from the m pile.
    return Move{0, m, fib(verdict.which.t)};
}

Outcome classify_two_pile_word(std::uint64_t m, std::uint64_t k, std::uint64_t r, WordReading reading) {
    if (r == 0) {
        throw std::invalid_argument("classify_two_pile_word: r must be >= 1");
    }
    if (m == 0) {
        return one_pile_word_outcome(k, ExtNat{r});
    }
    return sigma(m, r, k, reading).contains(k) ? Outcome::kP : Outcome::kN;
}

ThreeFourVerdict classify_34n(std::uint64_t n) {
    ThreeFourVerdict v;
    v.beatty = beatty_class(n);
    std::uint64_t pile = 3;
    std::uint64_t take = 1;
    switch (v.beatty) {
        case BeattyClass::kB2: pile = 4; take = 1; break;   // -> (3, 3, n; 2)
        case BeattyClass::kAB2: pile = 3; take = 1; break;  // -> (2, 4, n; 2)
        case BeattyClass::kAB1: pile = 3; take = 2; break;  // -> (1, 4, n; 4)
        case BeattyClass::kBB1: pile = 3; take = 3; break;  // -> (0, 4, n; 6)
    }
    const auto pos = Position::make({3, 4, n}, kInf);
    v.move = Move{pos.index_of(pile), pile, take};
    v.successor = pos.after(v.move);
    return v;
}

Pow2Verdict classify_pow2(std::span<const std::uint64_t> piles, ExtNat r) {
    if (r == ExtNat{0}) {
        throw std::invalid_argument("classify_pow2: r must be >= 1");
    }
    Pow2Verdict v;
    const std::uint64_t x = nim_sum(piles);
    const ExtNat low = smallest_bit(x);
    // sb(0) is infinite, which must beat an infinite bound too.
    if (x == 0 || low > r) {
        v.outcome = Outcome::kP;
        return v;
    }
    v.outcome = Outcome::kN;
    const auto pos = Position::make({piles.begin(), piles.end()}, r, Dynamic::kPowerOfTwo);
    for (std::size_t i = 0; i < pos.piles.size(); ++i) {
        if ((pos.piles[i] ^ x) < pos.piles[i]) {
            v.move = Move{pos.index_of(pos.piles[i]), pos.piles[i], low.value()};
            break;
        }
    }
    return v;
}

}  // namespace fibnim
