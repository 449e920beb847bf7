#include "nibble/driver.hpp"

#include "nibble/errors.hpp"

#include <fmt/format.h>

namespace nibble {

const char* to_string(StopReason reason)
{
    switch (reason) {
    case StopReason::AllColoured: return "all-coloured";
    case StopReason::RatioReached: return "ratio-reached";
    case StopReason::RoundCap: return "round-cap";
    case StopReason::RegimeExit: return "regime-exit";
    case StopReason::RetriesExhausted: return "retries-exhausted";
    }
    return "unknown";
}

namespace {

// Empty string when the round meets the accepted bounds.
std::string check_round(const RoundOutcome& outcome, const WeightedLists& before, const NibbleParams& params,
                        TargetPolicy policy)
{
    if (!outcome.deficient.empty()) {
        const EdgeId e = outcome.deficient.front();
        return fmt::format("edge {} kept list weight {:.6g} below the target {:.6g} ({} deficient edges)", e,
                           outcome.surviving.size(e), outcome.target, outcome.deficient.size());
    }
    if (policy != TargetPolicy::Schedule)
        return {};
    const double lower = 1.0 - 2.0 / params.L;
    for (EdgeId e = 0; e < outcome.lists.edge_count(); ++e)
        for (const auto& entry : outcome.lists.list(e)) {
            const double mu = *before.weight(e, entry.colour);
            if (entry.weight > mu * (1.0 + 1e-12) || entry.weight < lower * mu * (1.0 - 1e-12))
                return fmt::format("weight of colour {} on edge {} moved from {:.6g} to {:.6g}, outside [(1-2/L)mu, mu]",
                                   entry.colour, e, mu, entry.weight);
        }
    return {};
}

} // namespace

DriveResult drive_until_failure(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma,
                                const DriveOptions& options)
{
    const std::uint32_t m = g.edge_count();
    const std::uint32_t k = g.k();
    DriveResult out;
    out.colouring = PartialColouring(m);
    WeightedLists work = lists;
    std::vector<std::uint8_t> open(m, 1);

    ListMeasure measure = measure_lists(g, work, sigma, open, options.threads);
    NibbleParams params{options.eps, k, options.L0.value_or(measure.min_list),
                        options.N0.value_or(measure.max_neighbourhood), ParamDomain::Asymptotic};
    out.round_cap = options.round_cap.value_or(iteration_cap(options.eps, k, params.N));
    out.warnings = params.hypothesis_warnings();

    const CounterRng base(options.seed);
    std::uint32_t retries = 0;
    std::uint32_t coloured = 0;
    for (std::uint32_t i = 0;; ++i) {
        out.trace.push_back({i, params.L, params.N, params.ratio(), coloured, m - coloured, retries,
                             measure.min_list, measure.max_neighbourhood});
        if (coloured == m) {
            out.stop = StopReason::AllColoured;
            break;
        }
        if (params.ratio() >= finisher_ratio(k)) {
            out.stop = StopReason::RatioReached;
            break;
        }
        if (i >= out.round_cap) {
            out.stop = StopReason::RoundCap;
            break;
        }
        if (params.ratio() < (1.0 + params.eps) * (1.0 - 1e-12)) {
            out.stop = StopReason::RegimeExit;
            out.stop_detail = fmt::format("L/N = {:.6g} is below 1 + eps = {:.6g}", params.ratio(), 1.0 + params.eps);
            break;
        }
        try {
            keep_probability(params);
            if (options.policy == TargetPolicy::Schedule)
                next_params(params, options.mode);
        } catch (const Error& ex) {
            out.stop = StopReason::RegimeExit;
            out.stop_detail = ex.what();
            break;
        }

        std::optional<RoundOutcome> accepted;
        std::string failure;
        for (std::uint32_t attempt = 0; attempt <= options.retry_cap; ++attempt) {
            auto outcome = run_round(g, work, sigma, params, base.derive(Stream::Activation, {i, attempt}),
                                     options.policy, options.mode, options.threads);
            failure = check_round(outcome, work, params, options.policy);
            if (failure.empty()) {
                accepted = std::move(outcome);
                retries = attempt;
                break;
            }
        }
        if (!accepted) {
            out.stop = StopReason::RetriesExhausted;
            out.failure = fmt::format("round {} failed after {} attempts: {}", i, options.retry_cap + 1, failure);
            break;
        }

        for (auto [e, c] : accepted->coloured) {
            out.colouring.set(e, c);
            open[e] = 0;
            ++coloured;
        }
        work = std::move(accepted->lists);
        out.stats += accepted->stats;
        params.L = accepted->next.L;
        params.N = accepted->next.N;
        out.rounds = i + 1;
        measure = measure_lists(g, work, sigma, open, options.threads);
    }
    out.lists = std::move(work);
    out.params = params;
    return out;
}

DriveResult drive(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma,
                  const DriveOptions& options)
{
    auto out = drive_until_failure(g, lists, sigma, options);
    if (out.failure)
        throw NibbleFailure(out.rounds, *out.failure);
    return out;
}

} // namespace nibble
