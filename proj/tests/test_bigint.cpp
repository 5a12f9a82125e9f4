#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>

#include "zeck/bigint.hpp"

using zeck::BigInt;

TEST_CASE("int64 construction and decimal rendering") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(1).to_string() == "1");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(999999999).to_string() == "999999999");
    CHECK(BigInt(1000000000).to_string() == "1000000000");
    CHECK(BigInt(INT64_MAX).to_string() == "9223372036854775807");
    CHECK(BigInt(INT64_MIN).to_string() == "-9223372036854775808");
}

TEST_CASE("decimal parsing") {
    CHECK(BigInt::from_decimal("0") == BigInt(0));
    CHECK(BigInt::from_decimal("-0") == BigInt(0));
    CHECK(BigInt::from_decimal("007") == BigInt(7));
    CHECK(BigInt::from_decimal("-123456789012345678901234567890").to_string() ==
          "-123456789012345678901234567890");
    CHECK_THROWS_AS(BigInt::from_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_decimal("-"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_decimal("12a"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_decimal(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_decimal("+1"), std::invalid_argument);
}

TEST_CASE("arithmetic agrees with 64-bit reference on random operands") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<std::int64_t> dist(-2000000000LL, 2000000000LL);
    for (int round = 0; round < 2000; ++round) {
        std::int64_t x = dist(rng);
        std::int64_t y = dist(rng);
        CHECK(BigInt(x) + BigInt(y) == BigInt(x + y));
        CHECK(BigInt(x) - BigInt(y) == BigInt(x - y));
        CHECK(BigInt(x) * BigInt(y) ==
              BigInt(static_cast<std::int64_t>(static_cast<__int128>(x) * y)));
        CHECK((BigInt(x) <=> BigInt(y)) == (x <=> y));
    }
}

TEST_CASE("limb carry boundaries") {
    BigInt limb_max(0xffffffffLL);
    CHECK((limb_max + BigInt(1)).to_string() == "4294967296");
    CHECK((limb_max * limb_max).to_string() == "18446744065119617025");
    BigInt two_pow_128 = BigInt(1);
    for (int i = 0; i < 128; ++i) two_pow_128 += two_pow_128;
    CHECK(two_pow_128.to_string() == "340282366920938463463374607431768211456");
    CHECK((two_pow_128 - two_pow_128).is_zero());
    CHECK((two_pow_128 - BigInt(1) - two_pow_128) == BigInt(-1));
}

TEST_CASE("sign handling") {
    CHECK(BigInt(5).sign() == 1);
    CHECK(BigInt(-5).sign() == -1);
    CHECK(BigInt(0).sign() == 0);
    CHECK((-BigInt(0)) == BigInt(0));
    CHECK_FALSE((-BigInt(0)).is_negative());
    CHECK(BigInt(-7).abs() == BigInt(7));
    CHECK((BigInt(3) - BigInt(10)) == BigInt(-7));
    CHECK((BigInt(-3) * BigInt(-4)) == BigInt(12));
    CHECK((BigInt(-3) * BigInt(4)) == BigInt(-12));
    CHECK(BigInt(-2) < BigInt(1));
    CHECK(BigInt(-2) > BigInt(-3));
}

TEST_CASE("ring identities on random multi-limb operands") {
    std::mt19937_64 rng(77);
    auto random_big = [&rng]() {
        std::uniform_int_distribution<int> limbs(1, 6);
        std::uniform_int_distribution<std::uint64_t> word;
        BigInt value(0);
        int n = limbs(rng);
        for (int i = 0; i < n; ++i) {
            value *= BigInt(1LL << 62);
            value *= BigInt(4);
            value += BigInt(static_cast<std::int64_t>(word(rng) >> 1));
        }
        return rng() % 2 == 0 ? value : -value;
    };
    for (int round = 0; round < 300; ++round) {
        BigInt a = random_big();
        BigInt b = random_big();
        BigInt c = random_big();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        CHECK(a * b == b * a);
        CHECK(BigInt::from_decimal(a.to_string()) == a);
    }
}
