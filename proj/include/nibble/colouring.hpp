#pragma once

#include "nibble/correspondence.hpp"
#include "nibble/hypergraph.hpp"
#include "nibble/lists.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nibble {

/// Partial map gamma from edge ids to colours.
class PartialColouring {
public:
    PartialColouring() = default;
    explicit PartialColouring(std::uint32_t edge_count) : colours_(edge_count) {}

    std::uint32_t edge_count() const noexcept { return static_cast<std::uint32_t>(colours_.size()); }

    std::optional<Colour> operator[](EdgeId e) const { return colours_.at(e); }
    bool is_coloured(EdgeId e) const { return colours_.at(e).has_value(); }
    void set(EdgeId e, Colour c) { colours_.at(e) = c; }
    void clear(EdgeId e) { colours_.at(e).reset(); }

    std::uint32_t coloured_count() const;
    bool is_complete() const { return coloured_count() == edge_count(); }

    friend bool operator==(const PartialColouring&, const PartialColouring&) = default;

private:
    std::vector<std::optional<Colour>> colours_;
};

struct Violation {
    enum class Kind { NotInList, Blocking };

    Kind kind;
    EdgeId edge;
    Colour colour;
    // Second party of a blocking violation.
    EdgeId other_edge = 0;
    Colour other_colour = 0;

    std::string describe() const;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// N(e,v,c): pairs (f,c') with f != e, v in f, c' in L(f) and (f,c') blocking
/// (e,c). Sorted by edge id. Throws Precondition unless v is in e and c in L(e).
std::vector<EdgeColour> colour_neighbours(const Hypergraph& g, const WeightedLists& lists,
                                          const Correspondence& sigma, EdgeId e, VertexId v, Colour c);

/// |N(e,v,c)|_mu without materialising the set; no precondition checks.
double colour_neighbour_weight(const Hypergraph& g, const WeightedLists& lists,
                               const Correspondence& sigma, EdgeId e, VertexId v, Colour c);

/// Every list violation and every blocking pair among coloured edges, in
/// ascending edge order. Empty iff gamma is a valid partial colouring.
std::vector<Violation> validate_colouring(const Hypergraph& g, const WeightedLists& lists,
                                          const Correspondence& sigma, const PartialColouring& gamma);

/// For every uncoloured edge, drops colours blocked by a coloured neighbour.
/// Coloured edges keep their lists; surviving weights are unchanged.
/// Throws Validation if gamma is not valid.
WeightedLists restrict_lists(const Hypergraph& g, const WeightedLists& lists,
                             const Correspondence& sigma, const PartialColouring& gamma);

} // namespace nibble
