#include "nibble/link.hpp"

#include "nibble/errors.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <map>
#include <numeric>

namespace nibble {

VertexInstance to_link_instance(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma)
{
    std::vector<EdgeId> all(g.edge_count());
    std::iota(all.begin(), all.end(), EdgeId{0});
    return to_link_instance(g, lists, sigma, all);
}

VertexInstance to_link_instance(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma,
                                const std::vector<EdgeId>& edges)
{
    if (!std::is_sorted(edges.begin(), edges.end()) || std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error(ErrorCode::Precondition, "link instance edges must be strictly ascending");

    VertexInstance inst;
    inst.origin = edges;
    inst.arcs.resize(edges.size());
    inst.lists = WeightedLists(static_cast<std::uint32_t>(edges.size()));

    std::vector<NodeId> node_of(g.edge_count(), ~NodeId{0});
    for (NodeId u = 0; u < edges.size(); ++u) {
        if (edges[u] >= g.edge_count())
            throw Error(ErrorCode::Precondition, fmt::format("edge {} is not in the hypergraph", edges[u]));
        node_of[edges[u]] = u;
    }

    for (NodeId u = 0; u < edges.size(); ++u) {
        const EdgeId e = edges[u];
        auto list = lists.list(e);
        inst.lists.set_list(u, {list.begin(), list.end()});
        for (EdgeId f : g.neighbours(e)) {
            const NodeId w = node_of[f];
            if (w == ~NodeId{0})
                continue;
            inst.arcs[u].push_back({w, *g.shared_vertex(e, f)});
            if (u < w) {
                // Carry sigma(e,f) over as sigma(u,w); node order follows edge order.
                std::vector<std::pair<Colour, Colour>> moved;
                auto it = sigma.stored().find({e, f});
                if (it != sigma.stored().end()) {
                    for (auto [from, to] : it->second.moved())
                        moved.emplace_back(from, to);
                    inst.sigma.set(u, w, Permutation::from_partial(moved));
                }
            }
        }
        std::sort(inst.arcs[u].begin(), inst.arcs[u].end(),
                  [](const LinkArc& a, const LinkArc& b) { return a.node < b.node; });
    }
    return inst;
}

std::vector<GroupedWeight> grouped_neighbour_weight(const VertexInstance& inst, NodeId u, Colour c)
{
    std::map<VertexId, double> groups;
    for (const auto& arc : inst.arcs.at(u)) {
        auto& total = groups[arc.via];
        if (auto w = inst.lists.weight(arc.node, inst.sigma.map(u, arc.node, c)))
            total += *w;
    }
    std::vector<GroupedWeight> out;
    for (auto [via, weight] : groups)
        out.push_back({via, weight});
    return out;
}

} // namespace nibble
