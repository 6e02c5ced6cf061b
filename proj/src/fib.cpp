#include "fibnim/fib.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace fibnim {
namespace {

// F_0 .. F_93; F_93 still fits in an unsigned 64-bit word, which lets the
// greedy decomposition cover the whole uint64_t range.
constexpr std::size_t kTableSize = 94;

constexpr std::array<std::uint64_t, kTableSize> make_table() {
    std::array<std::uint64_t, kTableSize> t{};
    t[0] = 0;
    t[1] = 1;
    for (std::size_t i = 2; i < kTableSize; ++i) {
        t[i] = t[i - 1] + t[i - 2];
    }
    return t;
}

constexpr auto kFib = make_table();

std::uint64_t isqrt(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
    while (r > 0 && r * r > v) {
        --r;
    }
    while ((r + 1) * (r + 1) <= v) {
        ++r;
    }
    return r;
}

}  // namespace

std::uint64_t fib(int i) {
    if (i < 1) {
        throw std::invalid_argument("fib: index must be >= 1, got " + std::to_string(i));
    }
    if (i > kMaxFibIndex) {
        throw std::out_of_range("fib: index " + std::to_string(i) + " overflows 64-bit range (max " +
                                std::to_string(kMaxFibIndex) + ")");
    }
    return kFib[static_cast<std::size_t>(i)];
}

int fib_bracket(std::uint64_t r) {
    if (r == 0) {
        throw std::invalid_argument("fib_bracket: r must be positive");
    }
    // upper_bound over F_2.. gives the first F > r; the index before it is t.
    auto it = std::upper_bound(kFib.begin() + 2, kFib.end(), r);
    return static_cast<int>(std::distance(kFib.begin(), it)) - 1;
}

int fib_index_of(std::uint64_t value) {
    auto it = std::lower_bound(kFib.begin() + 2, kFib.end(), value);
    if (it == kFib.end() || *it != value) {
        return -1;
    }
    return static_cast<int>(std::distance(kFib.begin(), it));
}

std::uint64_t ZeckRep::sum() const {
    std::uint64_t s = 0;
    for (auto t : terms) {
        s += t;
    }
    return s;
}

bool ZeckRep::is_valid() const {
    if (terms.size() != indices.size()) {
        return false;
    }
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 2 || indices[i] >= static_cast<int>(kTableSize)) {
            return false;
        }
        if (kFib[static_cast<std::size_t>(indices[i])] != terms[i]) {
            return false;
        }
        if (i > 0 && indices[i] < indices[i - 1] + 2) {
            return false;
        }
    }
    return true;
}

ZeckRep zeckendorf(std::uint64_t n) {
    ZeckRep rep;
    int idx = static_cast<int>(kTableSize) - 1;
    while (n > 0) {
        while (kFib[static_cast<std::size_t>(idx)] > n) {
            --idx;
        }
        rep.terms.push_back(kFib[static_cast<std::size_t>(idx)]);
        rep.indices.push_back(idx);
        n -= kFib[static_cast<std::size_t>(idx)];
        idx -= 2;
    }
    std::reverse(rep.terms.begin(), rep.terms.end());
    std::reverse(rep.indices.begin(), rep.indices.end());
    return rep;
}

ExtNat z_k(std::uint64_t n, int k) {
    if (k < 1) {
        throw std::invalid_argument("z_k: k must be >= 1");
    }
    auto rep = zeckendorf(n);
    if (rep.size() < static_cast<std::size_t>(k)) {
        return kInf;
    }
    return rep.terms[static_cast<std::size_t>(k - 1)];
}

ExtNat z1(std::uint64_t n) {
    if (n == 0) {
        return kInf;
    }
    // Smallest term without building the whole representation: repeatedly
    // strip the largest Fibonacci number.
    int idx = static_cast<int>(kTableSize) - 1;
    std::uint64_t last = 0;
    while (n > 0) {
        while (kFib[static_cast<std::size_t>(idx)] > n) {
            --idx;
        }
        last = kFib[static_cast<std::size_t>(idx)];
        n -= last;
        idx -= 2;
    }
    return last;
}

std::uint64_t nim_sum(std::span<const std::uint64_t> values) {
    std::uint64_t x = 0;
    for (auto v : values) {
        x ^= v;
    }
    return x;
}

ExtNat smallest_bit(std::uint64_t n) {
    if (n == 0) {
        return kInf;
    }
    return n & (~n + 1);
}

std::string to_string(BeattyClass c) {
    switch (c) {
        case BeattyClass::kB2: return "B-2";
        case BeattyClass::kAB2: return "AB-2";
        case BeattyClass::kAB1: return "AB-1";
        case BeattyClass::kBB1: return "BB-1";
    }
    return "?";
}

bool in_beatty_class(std::uint64_t n, BeattyClass c) {
    auto shifted_at_least = [n](std::uint64_t shift, std::uint64_t min_term) {
        if (n < shift) {
            return false;
        }
        return z1(n - shift) >= ExtNat{min_term};
    };
    switch (c) {
        case BeattyClass::kB2: return shifted_at_least(0, 3);
        case BeattyClass::kAB2: return shifted_at_least(1, 5);
        case BeattyClass::kAB1: return shifted_at_least(2, 5);
        case BeattyClass::kBB1: return shifted_at_least(4, 8);
    }
    return false;
}

BeattyClass beatty_class(std::uint64_t n) {
    constexpr std::array kAll{BeattyClass::kB2, BeattyClass::kAB2, BeattyClass::kAB1, BeattyClass::kBB1};
    int hits = 0;
    BeattyClass found = BeattyClass::kB2;
    for (auto c : kAll) {
        if (in_beatty_class(n, c)) {
            ++hits;
            found = c;
        }
    }
    if (hits != 1) {
        throw std::logic_error("beatty_class: " + std::to_string(n) + " matched " + std::to_string(hits) +
                               " classes");
    }
    return found;
}

std::uint64_t beatty_lower(std::uint64_t n) {
    if (n >= (std::uint64_t{1} << 31)) {
        throw std::out_of_range("beatty_lower: argument too large");
    }
    // floor(phi n) = floor((n + sqrt(5 n^2)) / 2) = (n + isqrt(5 n^2)) / 2,
    // since sqrt(5 n^2) is irrational for n > 0.
    return (n + isqrt(5 * n * n)) / 2;
}

std::uint64_t beatty_upper(std::uint64_t n) { return beatty_lower(n) + n; }

}  // namespace fibnim
