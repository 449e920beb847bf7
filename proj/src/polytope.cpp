#include "nibble/polytope.hpp"

#include "nibble/errors.hpp"

#include <bit>
#include <fmt/format.h>

namespace nibble {

const char* to_string(MembershipWitness::Kind kind)
{
    switch (kind) {
    case MembershipWitness::Kind::Nonnegativity: return "nonnegativity";
    case MembershipWitness::Kind::Degree: return "degree";
    case MembershipWitness::Kind::OddSet: return "odd-set";
    }
    return "unknown";
}

MembershipVerdict edmonds_membership(const Hypergraph& g, const std::vector<double>& x, double shrink,
                                     std::uint32_t vertex_limit)
{
    using Kind = MembershipWitness::Kind;
    if (g.k() != 2)
        throw Error(ErrorCode::Unsupported, fmt::format("matching polytope needs a graph, got k = {}", g.k()));
    if (!(shrink >= 0.0 && shrink < 1.0))
        throw Error(ErrorCode::Range, fmt::format("shrink {} is outside [0, 1)", shrink));
    if (x.size() != g.edge_count())
        throw Error(ErrorCode::Precondition,
                    fmt::format("vector has {} entries for {} edges", x.size(), g.edge_count()));
    const std::uint32_t n = g.vertex_count();
    if (n > vertex_limit)
        throw Error(ErrorCode::EnumerationLimit,
                    fmt::format("{} vertices exceed the odd-set enumeration limit {}", n, vertex_limit));

    std::vector<double> y(x.size());
    for (std::size_t e = 0; e < x.size(); ++e)
        y[e] = x[e] / (1.0 - shrink);

    MembershipVerdict verdict;
    auto fail = [&](MembershipWitness w) {
        w.slack = w.bound - w.lhs;
        verdict.inside = false;
        verdict.witness = std::move(w);
        return verdict;
    };

    for (EdgeId e = 0; e < y.size(); ++e)
        if (y[e] < -polytope_tolerance)
            return fail({Kind::Nonnegativity, e, {}, -y[e], 0.0});

    for (VertexId v = 0; v < n; ++v) {
        double sum = 0.0;
        for (EdgeId e : g.incident(v))
            sum += y[e];
        if (sum > 1.0 + polytope_tolerance)
            return fail({Kind::Degree, 0, {v}, sum, 1.0});
    }

    // inside[mask] = sum of y over edges with both ends in mask, built by
    // adding the lowest vertex to the set without it.
    std::vector<std::vector<std::pair<VertexId, double>>> adj(n);
    for (EdgeId e = 0; e < y.size(); ++e) {
        auto vs = g.edge(e);
        if (vs[0] == vs[1])
            continue;
        adj[vs[0]].emplace_back(vs[1], y[e]);
        adj[vs[1]].emplace_back(vs[0], y[e]);
    }
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<double> inside(total, 0.0);
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        const auto low = static_cast<VertexId>(std::countr_zero(mask));
        const std::uint64_t rest = mask & (mask - 1);
        double sum = inside[rest];
        for (auto [u, w] : adj[low])
            if (rest >> u & 1)
                sum += w;
        inside[mask] = sum;
        const int size = std::popcount(mask);
        if (size < 3 || size % 2 == 0)
            continue;
        const double bound = 0.5 * (size - 1);
        if (sum > bound + polytope_tolerance) {
            std::vector<VertexId> W;
            for (VertexId v = 0; v < n; ++v)
                if (mask >> v & 1)
                    W.push_back(v);
            return fail({Kind::OddSet, 0, std::move(W), sum, bound});
        }
    }
    return verdict;
}

std::vector<double> lists_to_fractional(const WeightedLists& lists)
{
    std::vector<double> x(lists.edge_count());
    for (EdgeId e = 0; e < lists.edge_count(); ++e) {
        const auto size = lists.list(e).size();
        if (size == 0)
            throw Error(ErrorCode::DivisionDomain, fmt::format("list of edge {} is empty", e));
        x[e] = 1.0 / static_cast<double>(size);
    }
    return x;
}

PolytopeWeights polytope_lists_to_weights(const Hypergraph& g, const WeightedLists& lists, double delta,
                                          std::uint32_t vertex_limit)
{
    if (!(delta > 0.0 && delta < 1.0))
        throw Error(ErrorCode::Range, fmt::format("delta {} is outside (0, 1)", delta));
    const auto x = lists_to_fractional(lists);

    PolytopeWeights out;
    if (g.vertex_count() <= vertex_limit) {
        auto verdict = edmonds_membership(g, x, delta, vertex_limit);
        if (!verdict.inside)
            throw Error(ErrorCode::Precondition,
                        fmt::format("list vector is not in (1 - {}) MP(G): {} constraint violated by {:.3g}", delta,
                                    to_string(verdict.witness->kind), -verdict.witness->slack));
        out.checked = true;
    } else {
        out.warning = fmt::format("{} vertices exceed the enumeration limit {}; membership not checked",
                                  g.vertex_count(), vertex_limit);
    }

    out.lists = WeightedLists(lists.edge_count());
    for (EdgeId e = 0; e < lists.edge_count(); ++e) {
        const double mu = 1.0 / ((1.0 - delta) * static_cast<double>(lists.list(e).size()));
        if (mu > 1.0)
            throw Error(ErrorCode::Range,
                        fmt::format("weight {} on edge {} exceeds 1: list of size {} is too small for delta {}", mu, e,
                                    lists.list(e).size(), delta));
        std::vector<ListEntry> entries;
        for (const auto& entry : lists.list(e))
            entries.push_back({entry.colour, mu});
        out.lists.set_list(e, std::move(entries));
    }
    return out;
}

WeightedLists degree_weights(const Hypergraph& g, const WeightedLists& lists)
{
    WeightedLists out(lists.edge_count());
    for (EdgeId e = 0; e < lists.edge_count(); ++e) {
        const double mu = 1.0 / static_cast<double>(g.max_endpoint_degree(e));
        std::vector<ListEntry> entries;
        for (const auto& entry : lists.list(e))
            entries.push_back({entry.colour, mu});
        out.set_list(e, std::move(entries));
    }
    return out;
}

} // namespace nibble
