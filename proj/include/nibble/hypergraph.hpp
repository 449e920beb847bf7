#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace nibble {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Colour = std::uint32_t;

/// Hypergraph with a declared uniformity k. Graphs are the k = 2 case.
///
/// Construction only checks that vertex ids are in range; uniformity and
/// linearity are reported by validate_instance so that malformed inputs can
/// be diagnosed rather than rejected outright.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(std::uint32_t k, std::uint32_t vertex_count, std::vector<std::vector<VertexId>> edges);

    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t vertex_count() const noexcept { return vertex_count_; }
    std::uint32_t edge_count() const noexcept { return static_cast<std::uint32_t>(edges_.size()); }

    /// Vertices of e in ascending order (duplicates preserved).
    std::span<const VertexId> edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<std::vector<VertexId>>& edges() const noexcept { return edges_; }

    /// Edges containing v, ascending.
    std::span<const EdgeId> incident(VertexId v) const { return incidence_.at(v); }
    std::uint32_t degree(VertexId v) const { return static_cast<std::uint32_t>(incidence_.at(v).size()); }

    /// Distinct edges sharing at least one vertex with e, ascending.
    std::span<const EdgeId> neighbours(EdgeId e) const { return adjacent_.at(e); }

    bool contains(EdgeId e, VertexId v) const;
    bool adjacent(EdgeId e, EdgeId f) const;

    /// Smallest vertex shared by e and f (at most one in a linear hypergraph).
    std::optional<VertexId> shared_vertex(EdgeId e, EdgeId f) const;

    /// max over v in e of deg(v).
    std::uint32_t max_endpoint_degree(EdgeId e) const;

private:
    std::uint32_t k_ = 2;
    std::uint32_t vertex_count_ = 0;
    std::vector<std::vector<VertexId>> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<std::vector<EdgeId>> adjacent_;
};

} // namespace nibble
