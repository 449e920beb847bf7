#include "nibble/pipeline.hpp"

#include "nibble/errors.hpp"
#include "nibble/link.hpp"

#include <fmt/format.h>

namespace nibble {

const char* to_string(ColourMode mode)
{
    switch (mode) {
    case ColourMode::NibbleFinish: return "nibble+finish";
    case ColourMode::FinishOnly: return "finish-only";
    case ColourMode::Brute: return "brute";
    }
    return "unknown";
}

ColourMode colour_mode_from_string(const std::string& name)
{
    if (name == "nibble+finish")
        return ColourMode::NibbleFinish;
    if (name == "finish-only")
        return ColourMode::FinishOnly;
    if (name == "brute")
        return ColourMode::Brute;
    throw Error(ErrorCode::Precondition, fmt::format("unknown colouring mode '{}'", name));
}

const char* to_string(FinisherLists lists)
{
    switch (lists) {
    case FinisherLists::Restricted: return "restricted";
    case FinisherLists::Working: return "working";
    }
    return "unknown";
}

FinisherLists finisher_lists_from_string(const std::string& name)
{
    if (name == "restricted")
        return FinisherLists::Restricted;
    if (name == "working")
        return FinisherLists::Working;
    throw Error(ErrorCode::Precondition, fmt::format("unknown finisher lists '{}'", name));
}

const char* to_string(PipelineStatus status)
{
    switch (status) {
    case PipelineStatus::Success: return "success";
    case PipelineStatus::NibbleFailed: return "nibble-failed";
    case PipelineStatus::FinishFailed: return "finish-failed";
    case PipelineStatus::Unsatisfiable: return "unsatisfiable";
    case PipelineStatus::BruteCapExceeded: return "brute-cap-exceeded";
    }
    return "unknown";
}

namespace {

void run_finisher(const Instance& inst, const WeightedLists& lists, const PipelineOptions& options,
                  PipelineResult& out)
{
    const auto& g = inst.graph;
    std::vector<EdgeId> open;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!out.colouring.is_coloured(e))
            open.push_back(e);
    const auto link = to_link_instance(g, lists, inst.sigma, open);
    const std::uint64_t seed = CounterRng(options.drive.seed).bits(Stream::Finisher, {0});
    auto result = finish(link, seed, options.finish_cap, options.drive.threads);
    for (NodeId u = 0; u < link.node_count(); ++u)
        if (result.colours[u])
            out.colouring.set(link.origin[u], *result.colours[u]);
    if (result.log.outcome != FinishOutcome::Success) {
        // Keep only the finisher colours that clash with nothing, so the
        // reported colouring stays a valid partial colouring.
        std::vector<std::uint8_t> from_finisher(g.edge_count(), 0);
        for (EdgeId e : open)
            from_finisher[e] = 1;
        for (const auto& v : validate_colouring(g, inst.lists, inst.sigma, out.colouring)) {
            if (from_finisher[v.edge])
                out.colouring.clear(v.edge);
            if (v.kind == Violation::Kind::Blocking && from_finisher[v.other_edge])
                out.colouring.clear(v.other_edge);
        }
        out.status = PipelineStatus::FinishFailed;
        out.detail = fmt::format("finisher stopped ({}) after {} resamples on {} edges",
                                 to_string(result.log.outcome), result.log.iterations, open.size());
    }
    out.finisher = FinisherReport{std::move(open), std::move(result.log)};
}

} // namespace

PipelineResult colour_instance(const Instance& inst, const PipelineOptions& options)
{
    const auto& g = inst.graph;
    PipelineResult out;
    out.colouring = PartialColouring(g.edge_count());

    switch (options.mode) {
    case ColourMode::Brute: {
        auto result = brute_force_colour(g, inst.lists, inst.sigma, options.brute_cap);
        out.colouring = result.colouring;
        if (result.status == BruteStatus::Unsatisfiable)
            out.status = PipelineStatus::Unsatisfiable;
        else if (result.status == BruteStatus::CapExceeded)
            out.status = PipelineStatus::BruteCapExceeded;
        out.detail = fmt::format("{} after {} search nodes", to_string(result.status), result.nodes);
        out.brute = std::move(result);
        break;
    }
    case ColourMode::FinishOnly:
        run_finisher(inst, inst.lists, options, out);
        break;
    case ColourMode::NibbleFinish: {
        out.drive = drive_until_failure(g, inst.lists, inst.sigma, options.drive);
        out.colouring = out.drive->colouring;
        if (out.drive->failure) {
            out.status = PipelineStatus::NibbleFailed;
            out.detail = *out.drive->failure;
            break;
        }
        if (options.finisher_lists == FinisherLists::Restricted)
            run_finisher(inst, restrict_lists(g, inst.lists, inst.sigma, out.colouring), options, out);
        else
            run_finisher(inst, out.drive->lists, options, out);
        break;
    }
    }

    out.violations = validate_colouring(g, inst.lists, inst.sigma, out.colouring);
    if (out.status == PipelineStatus::Success && (!out.violations.empty() || !out.colouring.is_complete())) {
        out.status = PipelineStatus::FinishFailed;
        out.detail = out.violations.empty() ? "colouring is incomplete" : out.violations.front().describe();
    }
    return out;
}

} // namespace nibble
