#include "nibble/bounds.hpp"

#include "nibble/errors.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <vector>

namespace nibble {

BinomBound weighted_binom_bound(std::span<const double> p, std::uint32_t k)
{
    if (k == 0)
        throw Error(ErrorCode::Precondition, "subset size k must be positive");
    double total = 0.0;
    for (double x : p) {
        if (!(x > 0.0))
            throw Error(ErrorCode::Precondition, fmt::format("value {} is not positive", x));
        total += x;
    }

    // e[j] = elementary symmetric polynomial of degree j over the prefix seen so far.
    std::vector<double> e(k + 1, 0.0);
    e[0] = 1.0;
    for (double x : p)
        for (std::uint32_t j = k; j >= 1; --j)
            e[j] += x * e[j - 1];

    const double kd = static_cast<double>(k);
    return {e[k], std::pow(std::numbers::e * total / kd, kd)};
}

} // namespace nibble
