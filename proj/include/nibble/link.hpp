#pragma once

#include "nibble/correspondence.hpp"
#include "nibble/hypergraph.hpp"
#include "nibble/lists.hpp"

#include <cstdint>
#include <vector>

namespace nibble {

using NodeId = std::uint32_t;

struct LinkArc {
    NodeId node;
    VertexId via; // the original vertex shared by the two edges
};

/// Vertex-colouring instance on the link graph: one node per original edge,
/// adjacent when the edges intersect. Lists, weights and correspondences are
/// carried over; sigma is keyed by node ids.
struct VertexInstance {
    std::vector<EdgeId> origin;                // node -> original edge
    std::vector<std::vector<LinkArc>> arcs;    // ascending by node
    WeightedLists lists;
    Correspondence sigma;

    std::uint32_t node_count() const noexcept { return static_cast<std::uint32_t>(origin.size()); }
    bool blocks(NodeId u, Colour c, NodeId w, Colour c2) const { return sigma.blocks(u, c, w, c2); }
};

/// Link instance over every edge of g.
VertexInstance to_link_instance(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma);

/// Link instance over a subset of edges (ascending ids); lists are indexed by
/// original edge id.
VertexInstance to_link_instance(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma,
                                const std::vector<EdgeId>& edges);

struct GroupedWeight {
    VertexId via;
    double weight;
};

/// For node u and colour c: the neighbour weight |N(u,c)|_mu grouped by the
/// shared original vertex, ascending by vertex.
std::vector<GroupedWeight> grouped_neighbour_weight(const VertexInstance& inst, NodeId u, Colour c);

} // namespace nibble
