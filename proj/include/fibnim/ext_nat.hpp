#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fibnim {

/// Nonnegative integer extended with an infinity sentinel.
///
/// Only comparison is defined. There is deliberately no operator+ or
/// operator*: callers that need arithmetic must unwrap with value() and
/// deal with the infinite case themselves.
class ExtNat {
public:
    constexpr ExtNat() = default;
    constexpr ExtNat(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    static constexpr ExtNat inf() {
        ExtNat e;
        e.inf_ = true;
        return e;
    }

    constexpr bool is_inf() const { return inf_; }
    constexpr bool is_finite() const { return !inf_; }

    std::uint64_t value() const {
        if (inf_) {
            throw std::logic_error("ExtNat::value() called on infinity");
        }
        return value_;
    }

    /// Finite value, or `fallback` for infinity.
    constexpr std::uint64_t value_or(std::uint64_t fallback) const { return inf_ ? fallback : value_; }

    friend constexpr bool operator==(const ExtNat& a, const ExtNat& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
        if (a.inf_ || b.inf_) {
            return static_cast<int>(a.inf_) <=> static_cast<int>(b.inf_);
        }
        return a.value_ <=> b.value_;
    }

    std::string to_string() const { return inf_ ? "inf" : std::to_string(value_); }

    /// Accepts a decimal integer or "inf" (also "INF", "∞").
    static ExtNat parse(const std::string& text);

private:
    std::uint64_t value_ = 0;
    bool inf_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const ExtNat& e) { return os << e.to_string(); }

inline constexpr ExtNat kInf = ExtNat::inf();

}  // namespace fibnim
