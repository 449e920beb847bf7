#include "nibble/hypergraph.hpp"

#include "nibble/errors.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace nibble {

Hypergraph::Hypergraph(std::uint32_t k, std::uint32_t vertex_count, std::vector<std::vector<VertexId>> edges)
    : k_(k), vertex_count_(vertex_count), edges_(std::move(edges)), incidence_(vertex_count)
{
    if (k_ < 2)
        throw Error(ErrorCode::Precondition, fmt::format("uniformity k must be at least 2, got {}", k_));

    for (EdgeId e = 0; e < edges_.size(); ++e) {
        auto& verts = edges_[e];
        std::sort(verts.begin(), verts.end());
        for (VertexId v : verts)
            if (v >= vertex_count_)
                throw Error(ErrorCode::Precondition,
                            fmt::format("edge {} references vertex {} but vertex_count is {}", e, v, vertex_count_));
        auto last = std::unique(verts.begin(), verts.end());
        for (auto it = verts.begin(); it != last; ++it)
            incidence_[*it].push_back(e);
    }

    adjacent_.resize(edges_.size());
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        auto& adj = adjacent_[e];
        for (VertexId v : edges_[e])
            for (EdgeId f : incidence_[v])
                if (f != e)
                    adj.push_back(f);
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
}

bool Hypergraph::contains(EdgeId e, VertexId v) const
{
    const auto& verts = edges_.at(e);
    return std::binary_search(verts.begin(), verts.end(), v);
}

bool Hypergraph::adjacent(EdgeId e, EdgeId f) const
{
    const auto& adj = adjacent_.at(e);
    return std::binary_search(adj.begin(), adj.end(), f);
}

std::optional<VertexId> Hypergraph::shared_vertex(EdgeId e, EdgeId f) const
{
    const auto& a = edges_.at(e);
    const auto& b = edges_.at(f);
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return *i;
    }
    return std::nullopt;
}

std::uint32_t Hypergraph::max_endpoint_degree(EdgeId e) const
{
    std::uint32_t best = 0;
    for (VertexId v : edges_.at(e))
        best = std::max(best, degree(v));
    return best;
}

} // namespace nibble
