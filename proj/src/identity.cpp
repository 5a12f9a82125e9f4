#include "zeck/identity.hpp"

#include <algorithm>
#include <stdexcept>

namespace zeck {

namespace {

BigInt family_sum_at(const ShiftFamily& shifts, FibIndex n) {
    BigInt total;
    for (FibIndex shift : shifts) total += fib(n + shift);
    return total;
}

BigInt support_sum_at(const HoleySet& support, FibIndex n) {
    BigInt total;
    for (FibIndex element : support.elements()) total += fib(n + element);
    return total;
}

}  // namespace

FibIndex identity_n_min(const ShiftFamily& shifts, const HoleySet& support) {
    FibIndex threshold = 1;
    for (FibIndex shift : shifts) threshold = std::max(threshold, 1 - shift);
    for (FibIndex element : support.elements()) threshold = std::max(threshold, 1 - element);
    return threshold;
}

FibIndex min_universal_N(const ShiftFamily& shifts) {
    FibIndex base = 2;
    GoldenNumber weight{BigInt(0), BigInt(0)};  // sum of psi^a over the family
    for (FibIndex shift : shifts) {
        base = std::max(base, 1 - shift);
        weight = golden_add(weight, psi_pow(shift));
    }

    const GoldenNumber bound{BigInt(2), BigInt(-1)};  // 2 - phi = psi^2
    const GoldenNumber psi{BigInt(-1), BigInt(1)};
    GoldenNumber scaled = golden_mul(psi_pow(base), weight);
    constexpr FibIndex kSearchCap = 100000;
    for (FibIndex n = base; n < base + kSearchCap; ++n) {
        if (golden_sign(golden_sub(bound, scaled)) > 0) return n;
        scaled = golden_mul(scaled, psi);
    }
    throw std::logic_error("min_universal_N: geometric decay failed to reach the bound");
}

HoleySet support_at(const ShiftFamily& shifts, FibIndex base) {
    if (base < 2) throw std::invalid_argument("support_at: base index below 2");
    BigInt value;
    for (FibIndex shift : shifts) {
        if (base + shift < 1) throw std::invalid_argument("support_at: base too low for family");
        value += fib(base + shift);
    }
    return shift_set(zeckendorf_decompose(value).support, -base);
}

Identity universal_shift_set(const ShiftFamily& shifts) {
    ShiftFamily sorted = shifts;
    std::sort(sorted.begin(), sorted.end());
    HoleySet support = support_at(sorted, min_universal_N(sorted));
    if (!certify_identity(sorted, support))
        throw std::logic_error("universal_shift_set: constructed support failed certification");
    FibIndex n_min = identity_n_min(sorted, support);
    return {std::move(sorted), std::move(support), n_min};
}

bool certify_identity(const ShiftFamily& shifts, const HoleySet& support) {
    FibIndex start = identity_n_min(shifts, support);
    for (FibIndex n = start; n <= start + 1; ++n) {
        if (family_sum_at(shifts, n) != support_sum_at(support, n)) return false;
    }
    return true;
}

bool verify_range(const Identity& identity, std::int64_t count) {
    if (count < 1) throw std::invalid_argument("verify_range: count must be positive");
    for (FibIndex n = identity.n_min; n < identity.n_min + count; ++n) {
        if (family_sum_at(identity.shifts, n) != support_sum_at(identity.support, n)) return false;
    }
    return true;
}

std::vector<Identity> family_table(int k_max) {
    if (k_max < 1) throw std::invalid_argument("family_table: empty request");
    std::vector<Identity> table;
    table.reserve(static_cast<std::size_t>(k_max));
    ShiftFamily zeros;
    for (int k = 1; k <= k_max; ++k) {
        zeros.push_back(0);
        table.push_back(universal_shift_set(zeros));
    }
    return table;
}

std::string shift_term(FibIndex shift) {
    if (shift == 0) return "f_n";
    std::string index = shift > 0 ? "n+" + std::to_string(shift) : "n-" + std::to_string(-shift);
    return "f_{" + index + "}";
}

std::string render_support_sum(const HoleySet& support) {
    if (support.empty()) return "0";
    std::string text;
    for (FibIndex element : support.elements()) {
        if (!text.empty()) text += " + ";
        text += shift_term(element);
    }
    return text;
}

std::string render_identity(const Identity& identity) {
    std::string left;
    ShiftFamily sorted = identity.shifts;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t run = i;
        while (run < sorted.size() && sorted[run] == sorted[i]) ++run;
        if (!left.empty()) left += " + ";
        if (run - i > 1) left += std::to_string(run - i);
        left += shift_term(sorted[i]);
        i = run;
    }
    if (left.empty()) left = "0";
    return left + " = " + render_support_sum(identity.support) +
           " for all n >= " + std::to_string(identity.n_min);
}

}  // namespace zeck
