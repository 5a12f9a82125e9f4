#include "zeck/zeckendorf.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace zeck {

bool HoleySet::contains(FibIndex value) const {
    return std::binary_search(elements_.begin(), elements_.end(), value);
}

HoleySet make_holey(std::vector<FibIndex> elements) {
    std::sort(elements.begin(), elements.end());
    for (std::size_t i = 1; i < elements.size(); ++i) {
        if (elements[i] == elements[i - 1])
            throw std::invalid_argument("not holey: duplicate element");
        if (elements[i] == elements[i - 1] + 1)
            throw std::invalid_argument("not holey: consecutive elements");
    }
    return HoleySet(std::move(elements));
}

HoleySet shift_set(const HoleySet& set, FibIndex offset) {
    std::vector<FibIndex> shifted;
    shifted.reserve(set.size());
    for (FibIndex element : set.elements()) shifted.push_back(element + offset);
    return make_holey(std::move(shifted));
}

BigInt holey_sum(const HoleySet& set) {
    BigInt total;
    for (FibIndex element : set.elements()) {
        if (element < 1) throw std::domain_error("holey_sum: index out of numeration range");
        total += fib(element);
    }
    return total;
}

ZeckendorfRepr zeckendorf_decompose(const BigInt& n) {
    if (n.is_negative()) throw std::invalid_argument("zeckendorf_decompose: negative input");
    if (n.is_zero()) return {};

    // Climb fib(2), fib(3), ... until the next value would exceed n.
    std::vector<BigInt> ladder;  // ladder[i] = fib(i + 2)
    BigInt cur(1);   // fib(2)
    BigInt next(2);  // fib(3)
    ladder.push_back(cur);
    while (next <= n) {
        ladder.push_back(next);
        BigInt after = cur + next;
        cur = std::move(next);
        next = std::move(after);
    }

    // Greedy walk back down; after taking fib(k) the rest is below fib(k-1),
    // so picks can never be adjacent.
    std::vector<FibIndex> support;
    BigInt rest = n;
    for (std::size_t i = ladder.size(); i-- > 0 && !rest.is_zero();) {
        if (ladder[i] <= rest) {
            rest -= ladder[i];
            support.push_back(static_cast<FibIndex>(i) + 2);
        }
    }
    std::reverse(support.begin(), support.end());
    return {make_holey(std::move(support))};
}

}  // namespace zeck
