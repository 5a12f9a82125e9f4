#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zeck/zeckendorf.hpp"

namespace zeck {

// Finite multiset of index shifts, as a list with repetitions. A shift a
// contributes the term f(n + a); k repeats of the same shift act as the
// integer coefficient k.
using ShiftFamily = std::vector<FibIndex>;

// A certified identity
//
//     sum over shifts a of f(n + a)  =  sum over support s of f(n + s)
//
// holding for every n >= n_min, where n_min keeps every index on both sides
// at 1 or above (and is itself at least 1).
struct Identity {
    ShiftFamily shifts;  // sorted ascending, repetitions kept
    HoleySet support;
    FibIndex n_min;

    bool operator==(const Identity&) const = default;
};

// Smallest admissible validity threshold: max(1, 1 - min(shifts ∪ support)).
FibIndex identity_n_min(const ShiftFamily& shifts, const HoleySet& support);

// Smallest base index N at which the construction in support_at becomes
// universal: N >= 2, N + a >= 1 for every shift a, and
//
//     psi^N * (sum over shifts a of psi^a)  <  2 - phi      (psi = phi - 1)
//
// holds strictly, decided exactly in Z[phi]. Ties force N one higher; the
// left side decays geometrically, so the search always terminates.
FibIndex min_universal_N(const ShiftFamily& shifts);

// Evaluates the family at base index N and re-expands: the Zeckendorf
// support of sum_a fib(N + a), translated back by -N. Requires N >= 2 and
// N + a >= 1 for every shift a.
HoleySet support_at(const ShiftFamily& shifts, FibIndex base);

// The unique holey support set of the family identity, built at
// min_universal_N and certified before being returned.
Identity universal_shift_set(const ShiftFamily& shifts);

// Exact equality of both sums at the two consecutive points n_min and
// n_min + 1. Both sides obey x(n+1) = x(n) + x(n-1) in n, so agreement at
// two consecutive points propagates to every n >= n_min.
bool certify_identity(const ShiftFamily& shifts, const HoleySet& support);

// Exact equality of both sums for n = n_min .. n_min + count - 1.
// Requires count >= 1.
bool verify_range(const Identity& identity, std::int64_t count);

// Identities for k * f(n), k = 1 .. k_max. Throws std::invalid_argument if
// k_max < 1.
std::vector<Identity> family_table(int k_max);

// One summand, e.g. "f_n", "f_{n+2}", "f_{n-4}".
std::string shift_term(FibIndex shift);

// Right-hand side of an identity, e.g. "f_{n-2} + f_{n+1}"; "0" when empty.
std::string render_support_sum(const HoleySet& support);

// Canonical one-line form, e.g. "2f_n = f_{n-2} + f_{n+1} for all n >= 3".
// Repeated shifts collapse to a coefficient; coefficient 1 stays implicit.
std::string render_identity(const Identity& identity);

}  // namespace zeck
