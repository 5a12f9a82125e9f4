#pragma once

#include <cstddef>
#include <vector>

#include "zeck/golden.hpp"

namespace zeck {

// Finite set of integers with no two consecutive members, kept sorted
// ascending. The canonical support of a Fibonacci-sum expression.
class HoleySet {
public:
    HoleySet() = default;

    const std::vector<FibIndex>& elements() const { return elements_; }
    bool empty() const { return elements_.empty(); }
    std::size_t size() const { return elements_.size(); }
    FibIndex min() const { return elements_.front(); }
    FibIndex max() const { return elements_.back(); }
    bool contains(FibIndex value) const;

    bool operator==(const HoleySet&) const = default;

private:
    friend HoleySet make_holey(std::vector<FibIndex> elements);
    explicit HoleySet(std::vector<FibIndex> sorted) : elements_(std::move(sorted)) {}

    std::vector<FibIndex> elements_;
};

// Sorts and validates; throws std::invalid_argument if the input has a
// duplicate or two consecutive integers.
HoleySet make_holey(std::vector<FibIndex> elements);

// Elementwise translation; gaps are translation-invariant, so the result is
// holey again.
HoleySet shift_set(const HoleySet& set, FibIndex offset);

// Sum of fib over the elements; 0 for the empty set. Throws
// std::domain_error if any element is < 1.
BigInt holey_sum(const HoleySet& set);

// Zeckendorf representation: a holey support within {2, 3, 4, ...}.
struct ZeckendorfRepr {
    HoleySet support;

    bool operator==(const ZeckendorfRepr&) const = default;
};

// Greedy decomposition of n >= 0: repeatedly take the largest fib(k) <= rest
// with k >= 2. The result is the unique holey subset of {2, 3, ...} summing
// to n. Throws std::invalid_argument for negative n.
ZeckendorfRepr zeckendorf_decompose(const BigInt& n);

}  // namespace zeck
