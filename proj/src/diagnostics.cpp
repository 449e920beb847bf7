#include "nibble/diagnostics.hpp"

#include "nibble/errors.hpp"
#include "nibble/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <map>

namespace nibble {

namespace {

// Chunk sizes are fixed so that reductions happen in the same order for any
// thread count.
constexpr std::uint64_t trials_per_chunk = 1024;
constexpr std::uint64_t exact_chunks = 64;

struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x)
    {
        count += 1.0;
        const double delta = x - mean;
        mean += delta / count;
        m2 += delta * (x - mean);
    }

    void merge(const Moments& o)
    {
        if (o.count == 0.0)
            return;
        const double total = count + o.count;
        const double delta = o.mean - mean;
        mean += delta * o.count / total;
        m2 += o.m2 + delta * delta * count * o.count / total;
        count = total;
    }
};

} // namespace

std::vector<double> exact_expectation(const RoundPlan& plan, unsigned threads, std::uint32_t limit)
{
    const std::size_t m = plan.edges.size();
    std::vector<double> prob;
    std::vector<std::vector<std::uint32_t>> act(m), flip(m);
    for (std::size_t e = 0; e < m; ++e) {
        const auto& ep = plan.edges[e];
        for (double p : ep.activation) {
            act[e].push_back(static_cast<std::uint32_t>(prob.size()));
            prob.push_back(p);
        }
        for (double p : ep.equalizer) {
            flip[e].push_back(static_cast<std::uint32_t>(prob.size()));
            prob.push_back(p);
        }
    }
    if (prob.size() > limit)
        throw Error(ErrorCode::EnumerationLimit,
                    fmt::format("{} Bernoulli trials exceed the exact enumeration limit {}", prob.size(), limit));

    const std::uint64_t total = std::uint64_t{1} << prob.size();
    const std::uint64_t chunks = std::min(exact_chunks, total);
    std::vector<std::vector<double>> partial(chunks, std::vector<double>(m, 0.0));
    parallel_for(chunks, threads, [&](std::size_t chunk) {
        const std::uint64_t lo = total * chunk / chunks;
        const std::uint64_t hi = total * (chunk + 1) / chunks;
        auto& acc = partial[chunk];
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            double p = 1.0;
            for (std::size_t t = 0; t < prob.size(); ++t)
                p *= (mask >> t & 1) ? prob[t] : 1.0 - prob[t];
            if (p == 0.0)
                continue;
            for (std::size_t e = 0; e < m; ++e) {
                const auto& ep = plan.edges[e];
                if (ep.pairs.empty())
                    continue;
                const std::size_t slots = ep.equalizer.size() / ep.pairs.size();
                double x = 0.0;
                for (std::size_t i = 0; i < ep.pairs.size(); ++i) {
                    bool survives = true;
                    for (std::size_t j = 0; j < slots && survives; ++j) {
                        const std::size_t fl = i * slots + j;
                        survives = (mask >> flip[e][fl] & 1) != 0;
                        for (std::uint32_t t = ep.nbr_begin[fl]; t < ep.nbr_begin[fl + 1] && survives; ++t) {
                            const auto [f, at] = ep.nbrs[t];
                            survives = (mask >> act[f][at] & 1) == 0;
                        }
                    }
                    if (survives)
                        x += ep.pairs[i].weight;
                }
                acc[e] += p * x;
            }
        }
    });

    std::vector<double> out(m, 0.0);
    for (const auto& acc : partial)
        for (std::size_t e = 0; e < m; ++e)
            out[e] += acc[e];
    return out;
}

DiagnosticsReport expectation_diagnostic(const Hypergraph& g, const WeightedLists& lists,
                                         const Correspondence& sigma, const NibbleParams& params,
                                         std::uint64_t trials, std::uint64_t seed, unsigned threads,
                                         std::uint32_t exact_limit)
{
    if (trials == 0)
        throw Error(ErrorCode::Precondition, "trials must be at least 1");
    const RoundPlan plan = plan_round(g, lists, sigma, params, threads);
    const std::size_t m = plan.edges.size();

    DiagnosticsReport report;
    report.params = params;
    report.keep = plan.keep;
    report.target = params.L * std::pow(plan.keep, static_cast<double>(g.k()));
    report.trials = trials;
    report.bernoulli = plan.activation_count() + plan.flip_count();
    report.exact_mode = report.bernoulli <= exact_limit;

    const CounterRng base(seed);
    const std::uint64_t chunks = (trials + trials_per_chunk - 1) / trials_per_chunk;
    std::vector<std::vector<Moments>> partial(chunks, std::vector<Moments>(m));
    parallel_for(chunks, threads, [&](std::size_t chunk) {
        const std::uint64_t lo = chunk * trials_per_chunk;
        const std::uint64_t hi = std::min(trials, lo + trials_per_chunk);
        auto& acc = partial[chunk];
        for (std::uint64_t t = lo; t < hi; ++t) {
            const auto draw = draw_round(g, plan, base.derive(Stream::Diagnostic, {t}));
            const auto res = resolve_round(plan, draw);
            for (std::size_t e = 0; e < m; ++e) {
                const auto& ep = plan.edges[e];
                if (ep.pairs.empty())
                    continue;
                double x = 0.0;
                for (std::size_t i = 0; i < ep.pairs.size(); ++i)
                    if (res.survives[e][i])
                        x += ep.pairs[i].weight;
                acc[e].add(x);
            }
        }
    });
    std::vector<Moments> moments(m);
    for (const auto& acc : partial)
        for (std::size_t e = 0; e < m; ++e)
            moments[e].merge(acc[e]);

    std::vector<double> exact;
    if (report.exact_mode)
        exact = exact_expectation(plan, threads, exact_limit);

    const double kk = std::pow(plan.keep, static_cast<double>(g.k()));
    for (std::size_t e = 0; e < m; ++e) {
        const auto& ep = plan.edges[e];
        if (ep.pairs.empty())
            continue;
        EdgeDiagnostic d{};
        d.edge = static_cast<EdgeId>(e);
        d.list_weight = lists.size(d.edge);
        d.expected = d.list_weight * kk;
        d.mean = moments[e].mean;
        d.variance = moments[e].count > 1.0 ? moments[e].m2 / (moments[e].count - 1.0) : 0.0;
        d.std_error = std::sqrt(d.variance / moments[e].count);
        d.z = d.std_error > 0.0 ? (d.mean - d.expected) / d.std_error : 0.0;
        if (report.exact_mode)
            d.exact = exact[e];
        d.hypothesis = true;
        for (std::size_t f = 0; f < ep.equalizer.size(); ++f)
            d.hypothesis = d.hypothesis && !ep.clamped[f] && ep.nbr_weight[f] <= params.N;
        report.edges.push_back(d);
    }
    return report;
}

NeighbourhoodAudit neighbourhood_audit(const Hypergraph& g, const WeightedLists& lists,
                                       const Correspondence& sigma, unsigned threads)
{
    NeighbourhoodAudit audit;
    audit.extrema = measure_lists(g, lists, sigma, {}, threads);
    audit.vertex_sums.resize(g.vertex_count());
    parallel_for(g.vertex_count(), threads, [&](std::size_t idx) {
        const auto v = static_cast<VertexId>(idx);
        std::map<Colour, double> sums;
        for (EdgeId e : g.incident(v))
            for (const auto& entry : lists.list(e))
                sums[entry.colour] += entry.weight;
        VertexColourSum best{v, 0, 0.0};
        for (auto [c, s] : sums)
            if (s > best.sum)
                best = {v, c, s};
        audit.vertex_sums[v] = best;
    });
    for (const auto& s : audit.vertex_sums)
        audit.max_vertex_sum = std::max(audit.max_vertex_sum, s.sum);
    return audit;
}

} // namespace nibble
