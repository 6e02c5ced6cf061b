#pragma once

// Fibonacci words, their partial-sum sets, and the three-letter hybrid words
// used to classify two-pile positions with a small move bound.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fibnim {

// Abstract Fibonacci word over {x, y} ---------------------------------------

/// Prefix of S_inf built by the concatenation S_n = S_{n-1} S_{n-2}.
std::string fib_word_concat(std::size_t length);

/// Prefix built letter by letter: f_n = 'y' iff 1 is a Zeckendorf term of n.
std::string fib_word_zeck(std::size_t length);

/// Prefix of the fixed point of the parallel update x -> yz, y -> y (read
/// back on the alphabet (x, y)).
std::string fib_word_morphism(std::size_t length);

// Word specifications -------------------------------------------------------

/// w_a: the Fibonacci word with x = F_{a+1}, y = F_a.
struct SturmSpec {
    int level = 1;
};

/// Which parity selects the branch of the special transformation.
enum class SpecialParity {
    /// Branch on the parity of alpha. Agrees with the exhaustive solver.
    kAlpha,
    /// Branch on the parity of p + alpha. Identical for even p; wrong for odd
    /// p, kept so the verify suite can demonstrate the difference.
    kPPlusAlpha,
};

/// T^{-alpha}(w_p) for the smaller pile m = F_{p+1} - x.
struct HybridSpec {
    int p = 3;
    int alpha = -1;
    std::uint64_t x = 1;
    SpecialParity parity = SpecialParity::kAlpha;
};

using WordSpec = std::variant<SturmSpec, HybridSpec>;

std::string describe(const WordSpec& spec);

/// Thrown when a hybrid word is requested outside 3 <= p, -p+2 < alpha < 0,
/// 1 <= x <= F_{p-1}.
class WordRangeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Letter streams ------------------------------------------------------------

/// Lazily extended word whose letters are Fibonacci indices.
///
/// Letters are produced by a deterministic, prefix-stable generator; the
/// stream caches the longest prefix produced so far and regrows it
/// geometrically. Extending never changes earlier letters.
///
/// Not thread-safe: extension mutates the cache. Confine a stream to one
/// thread or guard it externally; copies of returned prefixes are safe to
/// share.
class LetterStream {
public:
    /// Must return at least `min_length` letters, and its output for a larger
    /// request must extend its output for a smaller one.
    using Generator = std::function<std::vector<std::uint8_t>(std::size_t min_length)>;

    LetterStream(std::vector<int> alphabet, Generator gen);

    /// Fibonacci indices of the letters, largest value first.
    const std::vector<int>& alphabet() const { return alphabet_; }

    int index_at(std::size_t i);
    std::uint64_t value_at(std::size_t i);

    std::vector<int> indices(std::size_t length);
    std::vector<std::uint64_t> values(std::size_t length);

    /// Partial sums (including the empty sum 0) that do not exceed `bound`.
    std::vector<std::uint64_t> partial_sums(std::uint64_t bound);

    std::size_t cached_length() const { return letters_.size(); }

private:
    void ensure(std::size_t length);

    std::vector<int> alphabet_;
    Generator gen_;
    std::vector<std::uint8_t> letters_;
};

LetterStream sturm_word(int level);

/// T^{-alpha}(w_p), built level by level from w_p. See word.cpp for the
/// transformation rules.
LetterStream hybrid_word(int p, int alpha, std::uint64_t x, SpecialParity parity = SpecialParity::kAlpha);

LetterStream make_stream(const WordSpec& spec);

// Partial-sum sets ----------------------------------------------------------

struct PSSet {
    WordSpec source;
    std::uint64_t bound = 0;
    std::vector<std::uint64_t> members;  // sorted, starts at 0

    bool contains(std::uint64_t n) const;
};

/// Partial sums of w_a up to `bound`, enumerated from the word.
PSSet ps_set(int level, std::uint64_t bound);

/// n in PS(w_a), via the Zeckendorf criterion z1(n) >= F_{a+1}.
bool in_ps(int level, std::uint64_t n);

// Sigma sets for two-pile positions -----------------------------------------

/// How the Sturm range alpha >= 0 maps onto word levels.
enum class SturmReading {
    /// sigma(0) = PS(w_p), sigma(1) = sigma(2) = PS(w_{p+1}),
    /// sigma(alpha) = PS(w_{p+alpha-1}) for alpha >= 2. Oracle-confirmed.
    kMergeOneTwo,
    /// sigma(alpha) = PS(w_{p+alpha}) for every alpha >= 0. Kept only so the
    /// verify suite can show that it disagrees with the oracle.
    kShiftEveryLevel,
};

/// Resolution of the two readings that the construction leaves open.
struct WordReading {
    SturmReading sturm = SturmReading::kMergeOneTwo;
    SpecialParity parity = SpecialParity::kAlpha;
};

struct SigmaParams {
    int p = 0;            // F_p <= m < F_{p+1}
    int alpha = 0;        // F_{p+alpha-1} <= r < F_{p+alpha}
    std::uint64_t x = 0;  // F_{p+1} - m
    WordSpec word;
};

/// Thrown by sigma_params when alpha falls at or below -p+2.
class SigmaRangeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

SigmaParams sigma_params(std::uint64_t m, std::uint64_t r, WordReading reading = {});

/// sigma_m(alpha) up to `bound`. Requires m >= 1 and r >= 1.
PSSet sigma(std::uint64_t m, std::uint64_t r, std::uint64_t bound, WordReading reading = {});

}  // namespace fibnim
