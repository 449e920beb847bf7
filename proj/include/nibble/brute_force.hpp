#pragma once

#include "nibble/colouring.hpp"
#include "nibble/correspondence.hpp"
#include "nibble/hypergraph.hpp"
#include "nibble/lists.hpp"

#include <cstdint>

namespace nibble {

enum class BruteStatus { Found, Unsatisfiable, CapExceeded };

const char* to_string(BruteStatus status);

struct BruteResult {
    BruteStatus status = BruteStatus::CapExceeded;
    PartialColouring colouring; // complete when status is Found
    std::uint64_t nodes = 0;    // colour assignments tried
};

/// Exhaustive backtracking with forward checking, branching on the uncoloured
/// edge with the fewest remaining colours. Uses only the hypergraph, the lists
/// and the correspondence, not the solver code.
BruteResult brute_force_colour(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma,
                               std::uint64_t node_cap = 10'000'000);

} // namespace nibble
