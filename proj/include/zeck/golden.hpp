#pragma once

#include <cstdint>

#include "zeck/bigint.hpp"

namespace zeck {

// Index into the Fibonacci sequence; any integer is valid.
using FibIndex = std::int64_t;

// f(1) = f(2) = 1 with f(n) = f(n-1) + f(n-2), extended to every integer by
// running the recurrence leftward: f(0) = 0, f(-1) = 1, f(-2) = -1, and in
// general f(-n) = (-1)^(n+1) * f(n).
BigInt fib(FibIndex n);

// Exact element a + b*phi of Z[phi], where phi = (1+sqrt(5))/2 satisfies
// phi^2 = phi + 1. Since 1 and phi are independent over the rationals,
// equality is componentwise.
struct GoldenNumber {
    BigInt a;
    BigInt b;

    bool operator==(const GoldenNumber&) const = default;
};

GoldenNumber golden_add(const GoldenNumber& x, const GoldenNumber& y);
GoldenNumber golden_sub(const GoldenNumber& x, const GoldenNumber& y);

// (a1 + b1*phi)(a2 + b2*phi) = (a1*a2 + b1*b2) + (a1*b2 + a2*b1 + b1*b2)*phi.
GoldenNumber golden_mul(const GoldenNumber& x, const GoldenNumber& y);

// (phi - 1)^k for any integer k; psi = phi - 1 = 1/phi, so negative k gives
// phi^(-k). Closed form over the two-sided sequence:
//   (phi - 1)^k = fib(-k)*phi + fib(-k-1).
GoldenNumber psi_pow(std::int64_t k);

// Exact sign of the real number a + b*phi, returned as -1, 0 or +1.
// With u = 2a + b and v = b the value is (u + v*sqrt(5))/2; when u and v
// disagree in sign the comparison reduces to u^2 versus 5*v^2.
int golden_sign(const GoldenNumber& x);

}  // namespace zeck
