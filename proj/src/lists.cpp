#include "nibble/lists.hpp"

#include "nibble/errors.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace nibble {

void WeightedLists::set_list(EdgeId e, std::vector<ListEntry> entries)
{
    std::stable_sort(entries.begin(), entries.end(),
                     [](const ListEntry& a, const ListEntry& b) { return a.colour < b.colour; });
    lists_.at(e) = std::move(entries);
}

std::optional<double> WeightedLists::weight(EdgeId e, Colour c) const
{
    const auto& l = lists_.at(e);
    auto it = std::lower_bound(l.begin(), l.end(), c,
                               [](const ListEntry& entry, Colour value) { return entry.colour < value; });
    if (it == l.end() || it->colour != c)
        return std::nullopt;
    return it->weight;
}

double WeightedLists::size(EdgeId e) const
{
    double total = 0.0;
    for (const auto& entry : lists_.at(e))
        total += entry.weight;
    return total;
}

double weighted_size(std::span<const EdgeColour> pairs, const WeightedLists& lists)
{
    std::vector<EdgeColour> ordered(pairs.begin(), pairs.end());
    std::sort(ordered.begin(), ordered.end());
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

    double total = 0.0;
    for (auto [e, c] : ordered) {
        if (e >= lists.edge_count())
            throw Error(ErrorCode::MissingWeight, fmt::format("edge {} has no list", e));
        auto w = lists.weight(e, c);
        if (!w)
            throw Error(ErrorCode::MissingWeight, fmt::format("pair ({}, {}) has no weight", e, c));
        total += *w;
    }
    return total;
}

} // namespace nibble
