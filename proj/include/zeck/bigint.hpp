#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zeck {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
// The magnitude is little-endian with no trailing zero limbs; zero is the
// empty limb vector and is never marked negative.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t value);

    // Accepts an optional leading '-' followed by at least one decimal digit.
    // Throws std::invalid_argument on anything else.
    static BigInt from_decimal(std::string_view text);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : +1); }

    BigInt abs() const;
    BigInt operator-() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs) { *this = *this * rhs; return *this; }

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { lhs += rhs; return lhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { lhs -= rhs; return lhs; }
    friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

    friend bool operator==(const BigInt& lhs, const BigInt& rhs) = default;
    friend std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs);

    std::string to_string() const;

private:
    using Limb = std::uint32_t;
    using Wide = std::uint64_t;
    static constexpr int kLimbBits = 32;

    bool negative_ = false;
    std::vector<Limb> limbs_;

    void trim();
    void negate_in_place();
    static std::strong_ordering compare_magnitude(const BigInt& lhs, const BigInt& rhs);
    static std::vector<Limb> add_magnitude(const std::vector<Limb>& big, const std::vector<Limb>& small);
    // Requires |big| >= |small|.
    static std::vector<Limb> sub_magnitude(const std::vector<Limb>& big, const std::vector<Limb>& small);
    void mul_add_small(Limb multiplier, Limb addend);
    // Divides the magnitude in place, returning the remainder; divisor > 0.
    Limb divmod_small(Limb divisor);
};

}  // namespace zeck
