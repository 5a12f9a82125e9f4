#include "zeck/golden.hpp"

#include <utility>

namespace zeck {

BigInt fib(FibIndex n) {
    if (n < 0) {
        BigInt mirrored = fib(-n);
        return (-n) % 2 == 0 ? -mirrored : mirrored;
    }
    BigInt prev(0);  // f(0)
    BigInt cur(1);   // f(1)
    for (FibIndex i = 0; i < n; ++i) {
        BigInt next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return prev;
}

GoldenNumber golden_add(const GoldenNumber& x, const GoldenNumber& y) {
    return {x.a + y.a, x.b + y.b};
}

GoldenNumber golden_sub(const GoldenNumber& x, const GoldenNumber& y) {
    return {x.a - y.a, x.b - y.b};
}

GoldenNumber golden_mul(const GoldenNumber& x, const GoldenNumber& y) {
    BigInt cross = x.a * y.b + x.b * y.a;
    BigInt mixed = x.b * y.b;
    return {x.a * y.a + mixed, cross + mixed};
}

GoldenNumber psi_pow(std::int64_t k) {
    return {fib(-k - 1), fib(-k)};
}

int golden_sign(const GoldenNumber& x) {
    BigInt u = x.a + x.a + x.b;
    const BigInt& v = x.b;
    int su = u.sign();
    int sv = v.sign();
    if (su == 0 && sv == 0) return 0;
    if (su >= 0 && sv >= 0) return +1;
    if (su <= 0 && sv <= 0) return -1;
    // Mixed signs: |u| versus |v|*sqrt(5), squared to stay in the integers.
    // Equality would force u = v = 0 because sqrt(5) is irrational.
    BigInt u2 = u * u;
    BigInt v2_5 = BigInt(5) * v * v;
    if (u2 == v2_5) return 0;
    return u2 > v2_5 ? su : sv;
}

}  // namespace zeck
