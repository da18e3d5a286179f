#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace dualmod {

/// Element a + b*w of GF(4), where w^2 = w + 1. Bit 0 holds a, bit 1 holds b.
class GF4 {
public:
    constexpr GF4() = default;
    constexpr explicit GF4(std::uint8_t bits) : bits_(bits & 3u) {}
    constexpr GF4(bool a, bool b) : bits_(static_cast<std::uint8_t>(a | (b << 1))) {}

    static constexpr GF4 zero() { return GF4(0); }
    static constexpr GF4 one() { return GF4(1); }
    static constexpr GF4 omega() { return GF4(2); }
    static constexpr GF4 omega2() { return GF4(3); }

    constexpr std::uint8_t bits() const { return bits_; }
    constexpr bool lo() const { return bits_ & 1u; }
    constexpr bool hi() const { return (bits_ >> 1) & 1u; }
    constexpr bool is_zero() const { return bits_ == 0; }

    friend constexpr GF4 operator+(GF4 x, GF4 y) { return GF4(x.bits_ ^ y.bits_); }
    friend constexpr GF4 operator-(GF4 x, GF4 y) { return x + y; }

    // (a1 + b1 w)(a2 + b2 w) = (a1a2 + b1b2) + (a1b2 + a2b1 + b1b2) w
    friend constexpr GF4 operator*(GF4 x, GF4 y) {
        const bool a1 = x.lo(), b1 = x.hi(), a2 = y.lo(), b2 = y.hi();
        return GF4(static_cast<bool>((a1 & a2) ^ (b1 & b2)),
                   static_cast<bool>((a1 & b2) ^ (a2 & b1) ^ (b1 & b2)));
    }

    GF4& operator+=(GF4 y) { return *this = *this + y; }
    GF4& operator*=(GF4 y) { return *this = *this * y; }

    /// Throws std::domain_error on zero.
    GF4 inverse() const;

    /// Frobenius x -> x^2, which swaps w and w^2.
    constexpr GF4 frobenius() const { return *this * *this; }

    friend constexpr bool operator==(GF4, GF4) = default;

    std::string to_string() const;

private:
    std::uint8_t bits_ = 0;
};

inline GF4 gf4_mul(GF4 x, GF4 y) { return x * y; }

std::ostream& operator<<(std::ostream& os, GF4 x);

}  // namespace dualmod
