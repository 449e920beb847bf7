#include "nibble/finisher.hpp"

#include "nibble/params.hpp"
#include "nibble/parallel.hpp"
#include "nibble/rng.hpp"

#include <numbers>
#include <set>

namespace nibble {

bool feasibility_check(double L, double N, std::uint32_t k)
{
    return L >= finisher_ratio(k) * N;
}

bool lll_symmetric_check(double p, std::uint64_t d)
{
    return p <= 1.0 / (std::numbers::e * (static_cast<double>(d) + 1.0));
}

const char* to_string(FinishOutcome outcome)
{
    switch (outcome) {
    case FinishOutcome::Success: return "success";
    case FinishOutcome::CapExhausted: return "cap-exhausted";
    case FinishOutcome::EmptyList: return "empty-list";
    }
    return "unknown";
}

Colour sample_colour(const VertexInstance& inst, std::uint64_t seed, NodeId u, std::uint64_t r)
{
    auto list = inst.lists.list(u);
    const double x = CounterRng(seed).uniform(Stream::FinisherSample, {u, r}) * inst.lists.size(u);
    double cumulative = 0.0;
    for (const auto& entry : list) {
        cumulative += entry.weight;
        if (x < cumulative)
            return entry.colour;
    }
    return list.back().colour;
}

FinishResult finish(const VertexInstance& inst, std::uint64_t seed, std::optional<std::uint64_t> iteration_cap,
                    unsigned threads)
{
    const NodeId n = inst.node_count();
    FinishResult out;
    out.colours.resize(n);
    for (NodeId u = 0; u < n; ++u)
        if (inst.lists.list(u).empty()) {
            out.log.outcome = FinishOutcome::EmptyList;
            return out;
        }

    std::vector<Colour> colour(n);
    std::vector<std::uint64_t> draws(n, 1);
    parallel_for(n, threads, [&](std::size_t u) { colour[u] = sample_colour(inst, seed, static_cast<NodeId>(u), 0); });

    std::set<std::pair<NodeId, NodeId>> violated;
    auto scan = [&](NodeId u) {
        for (const auto& arc : inst.arcs[u])
            if (inst.blocks(u, colour[u], arc.node, colour[arc.node]))
                violated.insert(std::minmax(u, arc.node));
    };
    auto forget = [&](NodeId u) {
        for (const auto& arc : inst.arcs[u])
            violated.erase(std::minmax(u, arc.node));
    };
    for (NodeId u = 0; u < n; ++u)
        scan(u);

    const std::uint64_t cap = iteration_cap.value_or(100ULL * n);
    while (!violated.empty()) {
        if (out.log.iterations >= cap) {
            out.log.outcome = FinishOutcome::CapExhausted;
            return out;
        }
        const auto [u, w] = *violated.begin();
        out.log.events.push_back({u, w, colour[u], colour[w]});
        ++out.log.iterations;
        forget(u);
        forget(w);
        colour[u] = sample_colour(inst, seed, u, draws[u]++);
        colour[w] = sample_colour(inst, seed, w, draws[w]++);
        scan(u);
        scan(w);
    }
    for (NodeId u = 0; u < n; ++u)
        out.colours[u] = colour[u];
    out.log.outcome = FinishOutcome::Success;
    return out;
}

} // namespace nibble
