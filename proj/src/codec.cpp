#include "zeck/codec.hpp"

#include <istream>
#include <ostream>

#include "zeck/zeckendorf.hpp"

namespace zeck {

Bitstream Bitstream::from_bits(std::string_view zeros_and_ones) {
    Bitstream stream;
    for (char c : zeros_and_ones) {
        if (c != '0' && c != '1') throw std::invalid_argument("Bitstream: expected '0' or '1'");
        stream.push_bit(c == '1');
    }
    return stream;
}

void Bitstream::push_bit(bool bit) {
    if (bit_count_ % 8 == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(1u << (7 - bit_count_ % 8));
    ++bit_count_;
}

void Bitstream::append(const Bitstream& other) {
    for (std::uint64_t i = 0; i < other.bit_count_; ++i) push_bit(other.bit(i));
}

bool Bitstream::bit(std::uint64_t index) const {
    return (bytes_[index / 8] >> (7 - index % 8)) & 1u;
}

std::string Bitstream::to_bit_string() const {
    std::string text;
    text.reserve(bit_count_);
    for (std::uint64_t i = 0; i < bit_count_; ++i) text.push_back(bit(i) ? '1' : '0');
    return text;
}

Bitstream encode_one(const BigInt& value) {
    if (value.sign() < 1) throw std::invalid_argument("encode_one: value not encodable, must be >= 1");
    HoleySet support = zeckendorf_decompose(value).support;
    Bitstream stream;
    FibIndex top = support.max();
    for (FibIndex i = 2; i <= top; ++i) stream.push_bit(support.contains(i));
    stream.push_bit(true);  // terminator, forming "11" after b_top = 1
    return stream;
}

Bitstream encode_stream(const std::vector<BigInt>& values) {
    Bitstream stream;
    for (const BigInt& value : values) stream.append(encode_one(value));
    return stream;
}

std::vector<BigInt> decode_stream(const Bitstream& bits) {
    std::vector<BigInt> values;
    std::vector<bool> codeword;
    bool any_set = false;
    for (std::uint64_t i = 0; i < bits.bit_count(); ++i) {
        bool bit = bits.bit(i);
        if (bit && !codeword.empty() && codeword.back()) {
            // Terminator found; everything before this bit is content.
            BigInt value;
            for (std::size_t pos = 0; pos < codeword.size(); ++pos) {
                if (codeword[pos]) value += fib(static_cast<FibIndex>(pos) + 2);
            }
            values.push_back(std::move(value));
            codeword.clear();
            any_set = false;
            continue;
        }
        codeword.push_back(bit);
        any_set = any_set || bit;
    }
    if (any_set) throw DecodeError("decode_stream: truncated stream, unterminated codeword");
    return values;
}

void write_container(std::ostream& out, const Bitstream& bits) {
    std::uint64_t count = bits.bit_count();
    char header[8];
    for (int i = 0; i < 8; ++i) header[i] = static_cast<char>((count >> (8 * i)) & 0xffu);
    out.write(header, sizeof header);
    out.write(reinterpret_cast<const char*>(bits.bytes().data()),
              static_cast<std::streamsize>(bits.bytes().size()));
}

Bitstream read_container(std::istream& in) {
    char header[8];
    in.read(header, sizeof header);
    if (in.gcount() != sizeof header) throw DecodeError("read_container: truncated header");
    std::uint64_t count = 0;
    for (int i = 0; i < 8; ++i)
        count |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(header[i])) << (8 * i);

    std::uint64_t expected_bytes = (count + 7) / 8;
    std::vector<std::uint8_t> payload(expected_bytes);
    in.read(reinterpret_cast<char*>(payload.data()), static_cast<std::streamsize>(expected_bytes));
    if (static_cast<std::uint64_t>(in.gcount()) != expected_bytes)
        throw DecodeError("read_container: truncated payload");
    if (in.peek() != std::char_traits<char>::eof())
        throw DecodeError("read_container: trailing bytes after payload");

    Bitstream stream;
    for (std::uint64_t i = 0; i < count; ++i)
        stream.push_bit((payload[i / 8] >> (7 - i % 8)) & 1u);
    for (std::uint64_t i = count; i < expected_bytes * 8; ++i) {
        if ((payload[i / 8] >> (7 - i % 8)) & 1u)
            throw DecodeError("read_container: nonzero padding bits");
    }
    return stream;
}

}  // namespace zeck
