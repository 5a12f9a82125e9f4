#include "zeck/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace zeck {

namespace {

constexpr std::uint32_t kDecChunkBase = 1000000000u;  // 10^9, largest power of 10 in a limb
constexpr int kDecChunkDigits = 9;

}  // namespace

BigInt::BigInt(std::int64_t value) {
    if (value == 0) return;
    negative_ = value < 0;
    // Avoids overflow on INT64_MIN.
    std::uint64_t magnitude = negative_ ? ~static_cast<std::uint64_t>(value) + 1
                                        : static_cast<std::uint64_t>(value);
    while (magnitude != 0) {
        limbs_.push_back(static_cast<Limb>(magnitude & 0xffffffffu));
        magnitude >>= kLimbBits;
    }
}

BigInt BigInt::from_decimal(std::string_view text) {
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    if (text.empty()) throw std::invalid_argument("BigInt: empty decimal string");
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: invalid decimal digit");
    }
    BigInt result;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t take = std::min<std::size_t>(kDecChunkDigits, text.size() - pos);
        std::uint32_t chunk = 0;
        std::uint32_t scale = 1;
        for (std::size_t i = 0; i < take; ++i) {
            chunk = chunk * 10 + static_cast<std::uint32_t>(text[pos + i] - '0');
            scale *= 10;
        }
        result.mul_add_small(scale, chunk);
        pos += take;
    }
    result.negative_ = negative && !result.is_zero();
    return result;
}

BigInt BigInt::abs() const {
    BigInt result = *this;
    result.negative_ = false;
    return result;
}

BigInt BigInt::operator-() const {
    BigInt result = *this;
    result.negate_in_place();
    return result;
}

void BigInt::negate_in_place() {
    if (!is_zero()) negative_ = !negative_;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

std::strong_ordering BigInt::compare_magnitude(const BigInt& lhs, const BigInt& rhs) {
    if (lhs.limbs_.size() != rhs.limbs_.size())
        return lhs.limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = lhs.limbs_.size(); i-- > 0;) {
        if (lhs.limbs_[i] != rhs.limbs_[i]) return lhs.limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs) {
    if (lhs.sign() != rhs.sign()) return lhs.sign() <=> rhs.sign();
    auto magnitude = BigInt::compare_magnitude(lhs, rhs);
    return lhs.negative_ ? 0 <=> magnitude : magnitude;
}

std::vector<BigInt::Limb> BigInt::add_magnitude(const std::vector<Limb>& a, const std::vector<Limb>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<Limb> result;
    result.reserve(big.size() + 1);
    Wide carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        Wide sum = carry + big[i] + (i < small.size() ? small[i] : 0);
        result.push_back(static_cast<Limb>(sum & 0xffffffffu));
        carry = sum >> kLimbBits;
    }
    if (carry != 0) result.push_back(static_cast<Limb>(carry));
    return result;
}

std::vector<BigInt::Limb> BigInt::sub_magnitude(const std::vector<Limb>& big, const std::vector<Limb>& small) {
    std::vector<Limb> result;
    result.reserve(big.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(big[i]) - borrow -
                            (i < small.size() ? static_cast<std::int64_t>(small[i]) : 0);
        if (diff < 0) {
            diff += (static_cast<std::int64_t>(1) << kLimbBits);
            borrow = 1;
        } else {
            borrow = 0;
        }
        result.push_back(static_cast<Limb>(diff));
    }
    return result;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (negative_ == rhs.negative_) {
        limbs_ = add_magnitude(limbs_, rhs.limbs_);
        trim();
        return *this;
    }
    auto cmp = compare_magnitude(*this, rhs);
    if (cmp == std::strong_ordering::equal) {
        limbs_.clear();
        negative_ = false;
        return *this;
    }
    if (cmp > 0) {
        limbs_ = sub_magnitude(limbs_, rhs.limbs_);
    } else {
        limbs_ = sub_magnitude(rhs.limbs_, limbs_);
        negative_ = rhs.negative_;
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    negate_in_place();
    *this += rhs;
    negate_in_place();
    return *this;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
    BigInt result;
    if (lhs.is_zero() || rhs.is_zero()) return result;
    result.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        BigInt::Wide carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            // Fits: (2^32-1)^2 + 2*(2^32-1) = 2^64 - 1.
            BigInt::Wide cur = static_cast<BigInt::Wide>(lhs.limbs_[i]) * rhs.limbs_[j] +
                               result.limbs_[i + j] + carry;
            result.limbs_[i + j] = static_cast<BigInt::Limb>(cur & 0xffffffffu);
            carry = cur >> BigInt::kLimbBits;
        }
        result.limbs_[i + rhs.limbs_.size()] += static_cast<BigInt::Limb>(carry);
    }
    result.negative_ = lhs.negative_ != rhs.negative_;
    result.trim();
    return result;
}

void BigInt::mul_add_small(Limb multiplier, Limb addend) {
    Wide carry = addend;
    for (auto& limb : limbs_) {
        Wide cur = static_cast<Wide>(limb) * multiplier + carry;
        limb = static_cast<Limb>(cur & 0xffffffffu);
        carry = cur >> kLimbBits;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<Limb>(carry & 0xffffffffu));
        carry >>= kLimbBits;
    }
}

BigInt::Limb BigInt::divmod_small(Limb divisor) {
    Wide remainder = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        Wide cur = (remainder << kLimbBits) | limbs_[i];
        limbs_[i] = static_cast<Limb>(cur / divisor);
        remainder = cur % divisor;
    }
    trim();
    return static_cast<Limb>(remainder);
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt scratch = *this;
    std::vector<Limb> chunks;
    while (!scratch.is_zero()) chunks.push_back(scratch.divmod_small(kDecChunkBase));
    std::string text;
    if (negative_) text.push_back('-');
    text += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        text.append(kDecChunkDigits - part.size(), '0');
        text += part;
    }
    return text;
}

}  // namespace zeck
