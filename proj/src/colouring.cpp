#include "nibble/colouring.hpp"

#include "nibble/errors.hpp"

#include <fmt/format.h>

namespace nibble {

std::uint32_t PartialColouring::coloured_count() const
{
    std::uint32_t n = 0;
    for (const auto& c : colours_)
        n += c.has_value();
    return n;
}

std::string Violation::describe() const
{
    switch (kind) {
    case Kind::NotInList:
        return fmt::format("edge {} coloured {} which is not in its list", edge, colour);
    case Kind::Blocking:
        return fmt::format("edge {} coloured {} blocks edge {} coloured {}", edge, colour, other_edge, other_colour);
    }
    return {};
}

std::vector<EdgeColour> colour_neighbours(const Hypergraph& g, const WeightedLists& lists,
                                          const Correspondence& sigma, EdgeId e, VertexId v, Colour c)
{
    if (!g.contains(e, v))
        throw Error(ErrorCode::Precondition, fmt::format("vertex {} is not in edge {}", v, e));
    if (!lists.contains(e, c))
        throw Error(ErrorCode::Precondition, fmt::format("colour {} is not in the list of edge {}", c, e));

    std::vector<EdgeColour> out;
    for (EdgeId f : g.incident(v)) {
        if (f == e)
            continue;
        // (f,c') blocks (e,c) iff sigma(f,e)(c') = c iff c' = sigma(e,f)(c).
        const Colour partner = sigma.map(e, f, c);
        if (lists.contains(f, partner))
            out.emplace_back(f, partner);
    }
    return out;
}

double colour_neighbour_weight(const Hypergraph& g, const WeightedLists& lists,
                               const Correspondence& sigma, EdgeId e, VertexId v, Colour c)
{
    double total = 0.0;
    for (EdgeId f : g.incident(v)) {
        if (f == e)
            continue;
        if (auto w = lists.weight(f, sigma.map(e, f, c)))
            total += *w;
    }
    return total;
}

std::vector<Violation> validate_colouring(const Hypergraph& g, const WeightedLists& lists,
                                          const Correspondence& sigma, const PartialColouring& gamma)
{
    std::vector<Violation> out;
    const std::uint32_t m = std::min(g.edge_count(), gamma.edge_count());
    for (EdgeId e = 0; e < m; ++e) {
        auto ce = gamma[e];
        if (!ce)
            continue;
        if (e >= lists.edge_count() || !lists.contains(e, *ce))
            out.push_back({Violation::Kind::NotInList, e, *ce});
        for (EdgeId f : g.neighbours(e)) {
            if (f <= e || f >= m)
                continue;
            auto cf = gamma[f];
            if (cf && sigma.blocks(e, *ce, f, *cf))
                out.push_back({Violation::Kind::Blocking, e, *ce, f, *cf});
        }
    }
    return out;
}

WeightedLists restrict_lists(const Hypergraph& g, const WeightedLists& lists,
                             const Correspondence& sigma, const PartialColouring& gamma)
{
    auto violations = validate_colouring(g, lists, sigma, gamma);
    if (!violations.empty())
        throw Error(ErrorCode::Validation, "cannot restrict lists: " + violations.front().describe());

    WeightedLists out = lists;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (gamma.is_coloured(e))
            continue;
        std::vector<ListEntry> kept;
        for (const auto& entry : lists.list(e)) {
            bool blocked = false;
            for (EdgeId f : g.neighbours(e)) {
                auto cf = gamma[f];
                if (cf && sigma.blocks(f, *cf, e, entry.colour)) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked)
                kept.push_back(entry);
        }
        out.set_list(e, std::move(kept));
    }
    return out;
}

} // namespace nibble
