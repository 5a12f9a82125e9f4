#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zeck/bigint.hpp"

namespace zeck {

// Structurally damaged encoded data (dangling codeword, truncated container).
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite bit sequence packed most-significant-bit-first within each byte;
// the final partial byte is zero-padded and the bit length is carried
// alongside the bytes.
class Bitstream {
public:
    Bitstream() = default;

    // Builds from a string of '0' and '1'; throws std::invalid_argument on
    // other characters.
    static Bitstream from_bits(std::string_view zeros_and_ones);

    void push_bit(bool bit);
    void append(const Bitstream& other);

    bool bit(std::uint64_t index) const;
    std::uint64_t bit_count() const { return bit_count_; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    std::string to_bit_string() const;

    bool operator==(const Bitstream&) const = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t bit_count_ = 0;
};

// Fibonacci code for value >= 1: with Z the Zeckendorf support of the value
// and m = max Z, the bits are b_2 .. b_m (b_i = 1 iff i is in Z) followed by
// an appended 1. The support is holey, so the trailing "11" is the first and
// only occurrence. Throws std::invalid_argument for value < 1.
Bitstream encode_one(const BigInt& value);

// Concatenation of encode_one over the sequence.
Bitstream encode_stream(const std::vector<BigInt>& values);

// Splits at each non-overlapping "11" and rebuilds each value as the sum of
// fib(i + 2) over set content positions i. Bits after the last terminator
// must all be zero (padding); a leftover set bit raises DecodeError.
std::vector<BigInt> decode_stream(const Bitstream& bits);

// Container layout: 8-byte little-endian bit count, then the packed bytes.
void write_container(std::ostream& out, const Bitstream& bits);

// Reads one container; DecodeError on a short header, missing payload, a
// payload size that disagrees with the bit count, or nonzero padding bits.
Bitstream read_container(std::istream& in);

}  // namespace zeck
