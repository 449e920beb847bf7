#include "nibble/round.hpp"

#include "nibble/errors.hpp"
#include "nibble/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

namespace nibble {

namespace {

std::optional<std::uint32_t> index_of(std::span<const ListEntry> list, Colour c)
{
    auto it = std::lower_bound(list.begin(), list.end(), c,
                               [](const ListEntry& entry, Colour value) { return entry.colour < value; });
    if (it == list.end() || it->colour != c)
        return std::nullopt;
    return static_cast<std::uint32_t>(it - list.begin());
}

double list_weight(std::span<const ListEntry> list)
{
    double total = 0.0;
    for (const auto& entry : list)
        total += entry.weight;
    return total;
}

} // namespace

double equalizing_probability(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma,
                              const NibbleParams& params, EdgeId e, VertexId v, Colour c, bool* clamped)
{
    const double K = keep_probability(params);
    const double scale = params.L * std::log(params.N);
    double product = 1.0;
    for (const auto& [f, partner] : colour_neighbours(g, lists, sigma, e, v, c)) {
        const double factor = 1.0 - *lists.weight(f, partner) / scale;
        if (!(factor > 0.0))
            throw Error(ErrorCode::DegenerateWeight,
                        fmt::format("factor 1 - mu({}, {})/(L ln N) = {} is not positive", f, partner, factor));
        product *= factor;
    }
    const double eq = K / product;
    if (clamped)
        *clamped = eq > 1.0;
    return std::min(eq, 1.0);
}

std::uint64_t RoundPlan::activation_count() const
{
    std::uint64_t n = 0;
    for (const auto& ep : edges)
        n += ep.pairs.size();
    return n;
}

std::uint64_t RoundPlan::flip_count() const
{
    std::uint64_t n = 0;
    for (const auto& ep : edges)
        n += ep.equalizer.size();
    return n;
}

RoundPlan plan_round(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma,
                     const NibbleParams& params, unsigned threads)
{
    RoundPlan plan;
    plan.params = params;
    plan.keep = keep_probability(params);
    plan.k = g.k();
    plan.edges.resize(g.edge_count());
    const double scale = params.L * std::log(params.N);

    std::vector<std::uint64_t> clamped(g.edge_count(), 0), over(g.edge_count(), 0);
    parallel_for(g.edge_count(), threads, [&](std::size_t idx) {
        const auto e = static_cast<EdgeId>(idx);
        auto& ep = plan.edges[e];
        auto list = lists.list(e);
        if (list.empty())
            return;
        auto verts = g.edge(e);
        const std::size_t k = verts.size();
        ep.pairs.assign(list.begin(), list.end());
        ep.activation.resize(list.size());
        ep.equalizer.resize(list.size() * k);
        ep.clamped.resize(list.size() * k);
        ep.nbr_weight.resize(list.size() * k);
        ep.nbr_begin.reserve(list.size() * k + 1);
        for (std::size_t i = 0; i < list.size(); ++i) {
            ep.activation[i] = list[i].weight / scale;
            for (std::size_t j = 0; j < k; ++j) {
                ep.nbr_begin.push_back(static_cast<std::uint32_t>(ep.nbrs.size()));
                double product = 1.0;
                double weight = 0.0;
                for (EdgeId f : g.incident(verts[j])) {
                    if (f == e)
                        continue;
                    auto other = lists.list(f);
                    auto at = index_of(other, sigma.map(e, f, list[i].colour));
                    if (!at)
                        continue;
                    const double mu = other[*at].weight;
                    const double factor = 1.0 - mu / scale;
                    if (!(factor > 0.0))
                        throw Error(ErrorCode::DegenerateWeight,
                                    fmt::format("factor 1 - mu({}, {})/(L ln N) = {} is not positive", f,
                                                other[*at].colour, factor));
                    product *= factor;
                    weight += mu;
                    ep.nbrs.emplace_back(f, *at);
                }
                double eq = plan.keep / product;
                if (eq > 1.0) {
                    eq = 1.0;
                    ++clamped[e];
                    ep.clamped[i * k + j] = 1;
                }
                over[e] += weight > params.N;
                ep.equalizer[i * k + j] = eq;
                ep.nbr_weight[i * k + j] = weight;
            }
        }
        ep.nbr_begin.push_back(static_cast<std::uint32_t>(ep.nbrs.size()));
    });
    plan.clamped = std::accumulate(clamped.begin(), clamped.end(), std::uint64_t{0});
    plan.neighbourhood_over = std::accumulate(over.begin(), over.end(), std::uint64_t{0});
    return plan;
}

RoundDraw draw_round(const Hypergraph& g, const RoundPlan& plan, const CounterRng& rng, unsigned threads)
{
    RoundDraw draw;
    draw.assigned.resize(plan.edges.size());
    draw.passed.resize(plan.edges.size());
    parallel_for(plan.edges.size(), threads, [&](std::size_t idx) {
        const auto& ep = plan.edges[idx];
        if (ep.pairs.empty())
            return;
        auto verts = g.edge(static_cast<EdgeId>(idx));
        const std::size_t k = verts.size();
        auto& assigned = draw.assigned[idx];
        auto& passed = draw.passed[idx];
        assigned.resize(ep.pairs.size());
        passed.resize(ep.equalizer.size());
        for (std::size_t i = 0; i < ep.pairs.size(); ++i) {
            const Colour c = ep.pairs[i].colour;
            assigned[i] = rng.uniform(Stream::Activation, {idx, c}) < ep.activation[i];
            for (std::size_t j = 0; j < k; ++j)
                passed[i * k + j] = rng.uniform(Stream::CoinFlip, {idx, verts[j], c}) < ep.equalizer[i * k + j];
        }
    });
    return draw;
}

Resolution resolve_round(const RoundPlan& plan, const RoundDraw& draw, unsigned threads)
{
    const std::size_t m = plan.edges.size();
    Resolution res;
    res.survives.resize(m);
    res.colour.resize(m);
    std::vector<std::uint64_t> conflicts(m, 0), failures(m, 0);
    parallel_for(m, threads, [&](std::size_t e) {
        const auto& ep = plan.edges[e];
        if (ep.pairs.empty())
            return;
        const std::size_t slots = ep.equalizer.size() / ep.pairs.size();
        auto& survives = res.survives[e];
        survives.assign(ep.pairs.size(), 0);
        for (std::size_t i = 0; i < ep.pairs.size(); ++i) {
            bool blocked = false;
            bool flips = true;
            for (std::size_t j = 0; j < slots; ++j) {
                const std::size_t flip = i * slots + j;
                for (std::uint32_t t = ep.nbr_begin[flip]; t < ep.nbr_begin[flip + 1] && !blocked; ++t) {
                    const auto [f, at] = ep.nbrs[t];
                    blocked = draw.assigned[f][at] != 0;
                }
                flips = flips && draw.passed[e][flip] != 0;
            }
            if (blocked)
                ++conflicts[e];
            else if (!flips)
                ++failures[e];
            survives[i] = !blocked && flips;
            if (survives[i] && draw.assigned[e][i] && !res.colour[e])
                res.colour[e] = ep.pairs[i].colour;
        }
    });
    res.conflict_removals = std::accumulate(conflicts.begin(), conflicts.end(), std::uint64_t{0});
    res.flip_failures = std::accumulate(failures.begin(), failures.end(), std::uint64_t{0});
    return res;
}

std::optional<std::vector<ListEntry>> truncate_and_rescale(std::span<const ListEntry> list, double target)
{
    if (!(target > 0.0))
        throw Error(ErrorCode::Precondition, fmt::format("truncation target {} is not positive", target));
    double total = list_weight(list);
    if (total < target)
        return std::nullopt;

    std::vector<std::size_t> order(list.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (list[a].weight != list[b].weight)
            return list[a].weight < list[b].weight;
        return list[a].colour < list[b].colour;
    });
    // Weights are visited in ascending order, so once one deletion fails
    // every later one fails too: a single pass reaches the fixpoint.
    std::vector<std::uint8_t> keep(list.size(), 1);
    for (std::size_t idx : order) {
        if (total - list[idx].weight < target)
            break;
        total -= list[idx].weight;
        keep[idx] = 0;
    }

    std::vector<ListEntry> out;
    for (std::size_t i = 0; i < list.size(); ++i)
        if (keep[i])
            out.push_back(list[i]);
    const double factor = target / list_weight(out);
    for (auto& entry : out)
        entry.weight *= factor;
    return out;
}

const char* to_string(TargetPolicy policy)
{
    switch (policy) {
    case TargetPolicy::Schedule: return "schedule";
    case TargetPolicy::Measured: return "measured";
    }
    return "unknown";
}

TargetPolicy target_policy_from_string(const std::string& name)
{
    if (name == "schedule")
        return TargetPolicy::Schedule;
    if (name == "measured")
        return TargetPolicy::Measured;
    throw Error(ErrorCode::Precondition, fmt::format("unknown target policy '{}'", name));
}

RoundStats& RoundStats::operator+=(const RoundStats& other)
{
    activations += other.activations;
    conflict_removals += other.conflict_removals;
    flip_failures += other.flip_failures;
    clamped += other.clamped;
    neighbourhood_over += other.neighbourhood_over;
    return *this;
}

RoundOutcome run_round(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma,
                       const NibbleParams& params, const CounterRng& rng, TargetPolicy policy,
                       ScheduleMode mode, unsigned threads)
{
    const std::uint32_t m = g.edge_count();
    const RoundPlan plan = plan_round(g, lists, sigma, params, threads);
    const RoundDraw draw = draw_round(g, plan, rng, threads);
    const Resolution res = resolve_round(plan, draw, threads);

    RoundOutcome out;
    out.surviving = WeightedLists(m);
    out.lists = WeightedLists(m);
    out.stats.conflict_removals = res.conflict_removals;
    out.stats.flip_failures = res.flip_failures;
    out.stats.clamped = plan.clamped;
    out.stats.neighbourhood_over = plan.neighbourhood_over;

    std::vector<std::uint8_t> open(m, 0);
    for (EdgeId e = 0; e < m; ++e) {
        const auto& ep = plan.edges[e];
        for (auto a : draw.assigned[e])
            out.stats.activations += a;
        if (res.colour[e]) {
            out.coloured.emplace_back(e, *res.colour[e]);
            continue;
        }
        if (ep.pairs.empty())
            continue;
        open[e] = 1;
        std::vector<ListEntry> kept;
        for (std::size_t i = 0; i < ep.pairs.size(); ++i)
            if (res.survives[e][i])
                kept.push_back(ep.pairs[i]);
        out.surviving.set_list(e, std::move(kept));
    }

    if (policy == TargetPolicy::Schedule) {
        out.next = next_params(params, mode);
        out.target = out.next.L;
    } else {
        double lo = 0.0;
        bool any = false;
        for (EdgeId e = 0; e < m; ++e) {
            if (!open[e] || out.surviving.list(e).empty())
                continue;
            const double size = out.surviving.size(e);
            lo = any ? std::min(lo, size) : size;
            any = true;
        }
        out.target = lo;
    }

    for (EdgeId e = 0; e < m; ++e) {
        if (!open[e])
            continue;
        auto surviving = out.surviving.list(e);
        std::optional<std::vector<ListEntry>> truncated;
        if (!surviving.empty() && out.target > 0.0)
            truncated = truncate_and_rescale(surviving, out.target);
        if (truncated) {
            out.lists.set_list(e, std::move(*truncated));
        } else {
            out.deficient.push_back(e);
            out.lists.set_list(e, {surviving.begin(), surviving.end()});
        }
    }

    if (policy == TargetPolicy::Measured) {
        auto measured = measure_lists(g, out.lists, sigma, open, threads);
        out.next = {out.target, measured.max_neighbourhood};
    }
    return out;
}

ListMeasure measure_lists(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma,
                          const std::vector<std::uint8_t>& active, unsigned threads)
{
    const std::uint32_t m = g.edge_count();
    struct Local {
        bool used = false;
        double size = 0.0;
        double nbhd = -1.0;
        VertexId v = 0;
        Colour c = 0;
    };
    std::vector<Local> local(m);
    parallel_for(m, threads, [&](std::size_t idx) {
        const auto e = static_cast<EdgeId>(idx);
        if (!active.empty() && !active[e])
            return;
        auto& out = local[e];
        out.used = true;
        out.size = lists.size(e);
        for (VertexId v : g.edge(e))
            for (const auto& entry : lists.list(e)) {
                const double w = colour_neighbour_weight(g, lists, sigma, e, v, entry.colour);
                if (w > out.nbhd) {
                    out.nbhd = w;
                    out.v = v;
                    out.c = entry.colour;
                }
            }
    });

    ListMeasure result;
    bool first = true;
    for (EdgeId e = 0; e < m; ++e) {
        const auto& l = local[e];
        if (!l.used)
            continue;
        if (first || l.size < result.min_list) {
            result.min_list = l.size;
            result.min_edge = e;
        }
        if (l.nbhd > result.max_neighbourhood) {
            result.max_neighbourhood = l.nbhd;
            result.max_edge = e;
            result.max_vertex = l.v;
            result.max_colour = l.c;
        }
        first = false;
    }
    return result;
}

} // namespace nibble
