#pragma once

#include <cstdint>
#include <span>

namespace nibble {

struct BinomBound {
    double lhs; // sum over k-subsets S of prod_{i in S} p_i
    double rhs; // (e p / k)^k with p = sum p_i
};

/// lhs by the elementary symmetric polynomial recurrence. lhs = 0 when k
/// exceeds the number of values. Throws Precondition on k = 0 or p_i <= 0.
BinomBound weighted_binom_bound(std::span<const double> p, std::uint32_t k);

} // namespace nibble
