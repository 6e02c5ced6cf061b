#pragma once

// Fibonacci numbers, Zeckendorf decomposition, nim-sum arithmetic and the
// golden-ratio Beatty classes.
//
// Indexing convention everywhere in this library: F_1 = F_2 = 1, F_3 = 2.
// Zeckendorf terms always carry indices >= 2.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fibnim/ext_nat.hpp"

namespace fibnim {

/// Largest index accepted by fib(); F_92 is the last value below 2^63.
inline constexpr int kMaxFibIndex = 92;

/// F_i for 1 <= i <= 92. Throws std::invalid_argument for i < 1 and
/// std::out_of_range for i > 92.
std::uint64_t fib(int i);

/// The unique t >= 2 with F_t <= r < F_{t+1}. Throws for r == 0.
int fib_bracket(std::uint64_t r);

/// Index i >= 2 with F_i == value, or -1 when value is not a Fibonacci number.
int fib_index_of(std::uint64_t value);

struct ZeckRep {
    std::vector<std::uint64_t> terms;  // ascending
    std::vector<int> indices;          // matching Fibonacci indices, each >= 2

    std::uint64_t sum() const;
    bool empty() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }

    /// Indices strictly increasing, pairwise nonconsecutive, >= 2, and terms
    /// match the indices.
    bool is_valid() const;
};

ZeckRep zeckendorf(std::uint64_t n);

/// k-th smallest Zeckendorf term of n (k >= 1), or infinity when n has fewer
/// than k terms. z_k(0, k) is infinite for every k.
ExtNat z_k(std::uint64_t n, int k);

/// Shorthand for z_k(n, 1).
ExtNat z1(std::uint64_t n);

std::uint64_t nim_sum(std::span<const std::uint64_t> values);

/// Lowest set bit of n as a power of two; infinity for n == 0.
ExtNat smallest_bit(std::uint64_t n);

// Beatty classes ------------------------------------------------------------

/// The four classes that partition the nonnegative integers in the analysis
/// of (3, 4, n; inf).
enum class BeattyClass {
    kB2,   // B-2  = {n : z1(n) >= 3}
    kAB2,  // AB-2 = {n : z1(n-1) >= 5}
    kAB1,  // AB-1 = {n : z1(n-2) >= 5}
    kBB1,  // BB-1 = {n : z1(n-4) >= 8}
};

std::string to_string(BeattyClass c);

/// Membership predicate of one class, evaluated through z1. A shifted
/// argument that would go negative fails the predicate.
bool in_beatty_class(std::uint64_t n, BeattyClass c);

/// The unique class of n. Throws std::logic_error if the predicates do not
/// select exactly one class (they always do; the check is kept live).
BeattyClass beatty_class(std::uint64_t n);

/// floor(phi * n), exact integer arithmetic. Valid for n < 2^31.
std::uint64_t beatty_lower(std::uint64_t n);

/// floor(phi^2 * n) = floor(phi * n) + n.
std::uint64_t beatty_upper(std::uint64_t n);

}  // namespace fibnim
