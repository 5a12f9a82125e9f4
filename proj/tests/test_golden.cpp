#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "zeck/golden.hpp"

using zeck::BigInt;
using zeck::fib;
using zeck::golden_add;
using zeck::golden_mul;
using zeck::golden_sign;
using zeck::golden_sub;
using zeck::GoldenNumber;
using zeck::psi_pow;

namespace {

GoldenNumber gn(std::int64_t a, std::int64_t b) { return {BigInt(a), BigInt(b)}; }

const GoldenNumber kPsi = gn(-1, 1);  // phi - 1

// Enumerates every holey subset of {lo, ..., hi}, including the empty one.
void for_each_holey_subset(std::int64_t lo, std::int64_t hi,
                           std::vector<std::int64_t>& current,
                           const std::function<void(const std::vector<std::int64_t>&)>& visit) {
    visit(current);
    for (std::int64_t k = lo; k <= hi; ++k) {
        current.push_back(k);
        for_each_holey_subset(k + 2, hi, current, visit);
        current.pop_back();
    }
}

}  // namespace

TEST_CASE("fibonacci base cases and spot values") {
    CHECK(fib(1) == BigInt(1));
    CHECK(fib(2) == BigInt(1));
    CHECK(fib(0) == BigInt(0));
    CHECK(fib(-1) == BigInt(1));
    CHECK(fib(-2) == BigInt(-1));
    CHECK(fib(10) == BigInt(55));
    CHECK(fib(90) == BigInt(2880067194370816120LL));
    CHECK(fib(100).to_string() == "354224848179261915075");
}

TEST_CASE("fibonacci recurrence and monotonicity up to 500") {
    BigInt prev = fib(1);
    for (std::int64_t n = 1; n <= 500; ++n) {
        BigInt cur = fib(n);
        BigInt next = fib(n + 1);
        CHECK(cur.sign() == 1);
        CHECK(next >= cur);
        CHECK(fib(n + 2) == next + cur);
        prev = cur;
    }
}

TEST_CASE("two-sided symmetry fib(-n) = (-1)^(n+1) fib(n)") {
    for (std::int64_t n = 0; n <= 200; ++n) {
        BigInt expected = n % 2 == 0 ? -fib(n) : fib(n);
        CHECK(fib(-n) == expected);
    }
}

TEST_CASE("leftward extension satisfies the recurrence") {
    for (std::int64_t n = -200; n <= 2; ++n) {
        CHECK(fib(n) == fib(n - 1) + fib(n - 2));
    }
}

TEST_CASE("golden addition") {
    CHECK(golden_add(gn(0, 0), gn(3, -4)) == gn(3, -4));
    CHECK(golden_add(gn(1, 0), gn(-1, 1)) == gn(0, 1));
    CHECK(golden_add(gn(2, 3), gn(5, -1)) == gn(7, 2));
}

TEST_CASE("golden multiplication") {
    CHECK(golden_mul(gn(0, 1), gn(0, 1)) == gn(1, 1));  // phi^2 = phi + 1
    CHECK(golden_mul(gn(17, -5), gn(1, 0)) == gn(17, -5));
    CHECK(golden_mul(kPsi, kPsi) == gn(2, -1));  // psi^2 = 2 - phi
}

TEST_CASE("psi powers") {
    CHECK(psi_pow(0) == gn(1, 0));
    CHECK(psi_pow(1) == kPsi);
    CHECK(psi_pow(2) == gn(2, -1));
    CHECK(psi_pow(-1) == gn(0, 1));  // 1/psi = phi

    // Closed form versus explicit multiplication, across zero.
    for (std::int64_t k = -30; k <= 30; ++k) {
        CHECK(psi_pow(k + 1) == golden_mul(psi_pow(k), kPsi));
    }
}

TEST_CASE("golden_sign on fixed points") {
    CHECK(golden_sign(gn(0, 0)) == 0);
    CHECK(golden_sign(kPsi) == 1);        // phi - 1 > 0
    CHECK(golden_sign(gn(2, -1)) == 1);   // 2 - phi > 0
    CHECK(golden_sign(gn(-2, 1)) == -1);  // phi - 2 < 0
    CHECK(golden_sign(gn(1, -1)) == -1);  // 1 - phi < 0
    CHECK(golden_sign(gn(5, 0)) == 1);
    CHECK(golden_sign(gn(0, -2)) == -1);
}

TEST_CASE("golden_sign matches interval evaluation on random elements") {
    // Rational bracket of phi from consecutive Fibonacci quotients, computed
    // locally: fib(200)/fib(199) < phi < fib(201)/fib(200). The interval is
    // narrower than 2^-128, far below the scale of any nonzero a + b*phi
    // with coefficients bounded by 10^6.
    std::vector<BigInt> f(202);
    f[1] = BigInt(1);
    f[2] = BigInt(1);
    for (int i = 3; i <= 201; ++i) f[i] = f[i - 1] + f[i - 2];
    const BigInt& lo_num = f[200];
    const BigInt& lo_den = f[199];
    const BigInt& hi_num = f[201];
    const BigInt& hi_den = f[200];

    auto interval_sign = [&](const GoldenNumber& x) {
        // Endpoint signs of a + b*phi over [lo, hi]; denominators are positive.
        BigInt at_lo = x.a * lo_den + x.b * lo_num;
        BigInt at_hi = x.a * hi_den + x.b * hi_num;
        if (x.b.is_negative()) std::swap(at_lo, at_hi);
        if (at_lo.sign() > 0) return 1;
        if (at_hi.sign() < 0) return -1;
        REQUIRE(x.a.is_zero());
        REQUIRE(x.b.is_zero());
        return 0;
    };

    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::int64_t> coeff(-1000000, 1000000);
    for (int round = 0; round < 1000; ++round) {
        GoldenNumber x = gn(coeff(rng), coeff(rng));
        CHECK(golden_sign(x) == interval_sign(x));
    }
}

TEST_CASE("conjugate power identity fib(n+1) - fib(n) phi = (-1)^n psi^n") {
    for (std::int64_t n = 0; n <= 300; ++n) {
        GoldenNumber lhs{fib(n + 1), -fib(n)};
        GoldenNumber rhs = psi_pow(n);
        if (n % 2 == 1) rhs = golden_sub(gn(0, 0), rhs);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("holey psi sums never exceed psi") {
    auto check_subset = [](const std::vector<std::int64_t>& subset) {
        GoldenNumber total = gn(0, 0);
        for (std::int64_t s : subset) total = golden_add(total, psi_pow(s));
        CHECK(golden_sign(golden_sub(kPsi, total)) >= 0);
    };

    std::vector<std::int64_t> current;
    for_each_holey_subset(2, 12, current, check_subset);

    // Randomized holey subsets of {2..40}.
    std::mt19937_64 rng(1618);
    std::bernoulli_distribution take(0.4);
    for (int round = 0; round < 500; ++round) {
        std::vector<std::int64_t> subset;
        for (std::int64_t k = 2; k <= 40; ++k) {
            if (take(rng)) {
                subset.push_back(k);
                ++k;  // keep the set holey
            }
        }
        check_subset(subset);
    }
}
