#pragma once

#include "nibble/colouring.hpp"
#include "nibble/round.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nibble {

struct DriveOptions {
    double eps = 0.25;
    std::uint64_t seed = 0;
    std::uint32_t retry_cap = 50; // extra attempts allowed per round
    std::optional<std::uint32_t> round_cap; // default: iteration_cap(eps, k, N_0)
    TargetPolicy policy = TargetPolicy::Measured;
    ScheduleMode mode = ScheduleMode::Eps8;
    std::optional<double> L0; // default: min over edges of |L(e)|_mu
    std::optional<double> N0; // default: max over (e,v,c) of |N(e,v,c)|_mu
    unsigned threads = 1;
};

enum class StopReason {
    AllColoured,
    RatioReached, // L/N >= 3ek: hand over to the finisher
    RoundCap,
    RegimeExit, // round hypotheses fail: L/N < 1 + eps, N <= e^2, K <= 0 or L' <= 0
    RetriesExhausted,
};

const char* to_string(StopReason reason);

struct TraceRow {
    std::uint32_t round;
    double L;
    double N;
    double ratio;
    std::uint32_t edges_coloured;
    std::uint32_t edges_remaining;
    std::uint32_t retries;
    double min_list_size;
    double max_neighbourhood_size;
};

struct DriveResult {
    PartialColouring colouring;
    WeightedLists lists; // working lists of the uncoloured edges; empty for coloured ones
    NibbleParams params;
    std::vector<TraceRow> trace;
    StopReason stop = StopReason::AllColoured;
    std::string stop_detail;
    std::uint32_t rounds = 0;
    std::uint32_t round_cap = 0;
    RoundStats stats;
    std::vector<std::string> warnings;
    std::optional<std::string> failure; // set when a round ran out of retries
};

/// Iterates run_round from the given lists. A round is accepted when every
/// uncoloured edge reaches the round's target (and, under the schedule
/// policy, every rescaled weight stays within (1 - 2/L) of its old value);
/// otherwise it is redrawn with a fresh stream, up to retry_cap times.
/// Throws NibbleFailure naming the round and the offending edge when the
/// retries run out.
DriveResult drive(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma,
                  const DriveOptions& options);

/// As drive, but a round that runs out of retries ends the run with
/// `failure` set instead of throwing, so the trace up to that round survives.
DriveResult drive_until_failure(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma,
                                const DriveOptions& options);

} // namespace nibble
