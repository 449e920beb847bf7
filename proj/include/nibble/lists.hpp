#pragma once

#include "nibble/hypergraph.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace nibble {

struct ListEntry {
    Colour colour;
    double weight;

    friend bool operator==(const ListEntry&, const ListEntry&) = default;
};

using EdgeColour = std::pair<EdgeId, Colour>;

/// Per-edge colour lists L(e) with weights mu(e,c).
///
/// Each list is kept sorted by colour. Weighted sizes are accumulated in
/// ascending colour order, so results are reproducible bit for bit.
class WeightedLists {
public:
    WeightedLists() = default;
    explicit WeightedLists(std::uint32_t edge_count) : lists_(edge_count) {}

    std::uint32_t edge_count() const noexcept { return static_cast<std::uint32_t>(lists_.size()); }

    std::span<const ListEntry> list(EdgeId e) const { return lists_.at(e); }
    void set_list(EdgeId e, std::vector<ListEntry> entries);
    void clear_list(EdgeId e) { lists_.at(e).clear(); }

    bool contains(EdgeId e, Colour c) const { return weight(e, c).has_value(); }
    std::optional<double> weight(EdgeId e, Colour c) const;

    /// |L(e)|_mu.
    double size(EdgeId e) const;

    friend bool operator==(const WeightedLists&, const WeightedLists&) = default;

private:
    std::vector<std::vector<ListEntry>> lists_;
};

/// |A|_mu for a set of (edge, colour) pairs, summed in (edge, colour) order.
/// Throws MissingWeight if a pair is not in the assignment.
double weighted_size(std::span<const EdgeColour> pairs, const WeightedLists& lists);

} // namespace nibble
