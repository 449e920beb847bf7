#pragma once

#include "nibble/round.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace nibble {

inline constexpr std::uint32_t exact_trial_limit = 20;

struct EdgeDiagnostic {
    EdgeId edge;
    double list_weight;  // |L(e)|_mu
    double expected;     // |L(e)|_mu K^k
    double mean;         // over trials
    double variance;     // sample variance
    double std_error;
    double z;            // (mean - expected) / std_error; 0 when std_error is 0
    std::optional<double> exact;
    bool hypothesis;     // every |N(e,v,c)|_mu <= N and no Eq was clamped
};

struct DiagnosticsReport {
    NibbleParams params;
    double keep = 0.0;
    double target = 0.0; // L K^k
    std::uint64_t trials = 0;
    std::uint64_t bernoulli = 0; // activations plus flips
    bool exact_mode = false;
    std::vector<EdgeDiagnostic> edges; // edges with nonempty lists
};

/// Runs steps (I)-(III) without truncation `trials` times (trial t uses the
/// stream derived from (seed, t)) and reports per-edge statistics of the
/// surviving weighted list size. When the round has at most exact_limit
/// Bernoulli trials, also computes the exact expectation by enumerating all
/// outcomes. Throws Precondition when trials is 0.
DiagnosticsReport expectation_diagnostic(const Hypergraph& g, const WeightedLists& lists,
                                         const Correspondence& sigma, const NibbleParams& params,
                                         std::uint64_t trials, std::uint64_t seed, unsigned threads = 1,
                                         std::uint32_t exact_limit = exact_trial_limit);

/// Exact E|L'(e)|_mu per edge (indexed by edge id; 0 for edges without a list)
/// by enumerating all 2^T outcomes. Throws EnumerationLimit when T > limit.
std::vector<double> exact_expectation(const RoundPlan& plan, unsigned threads = 1,
                                      std::uint32_t limit = exact_trial_limit);

struct VertexColourSum {
    VertexId vertex;
    Colour colour; // colour attaining the maximum
    double sum;    // max over c of sum over e containing v of mu(e,c)
};

struct NeighbourhoodAudit {
    ListMeasure extrema;
    std::vector<VertexColourSum> vertex_sums; // one per vertex
    double max_vertex_sum = 0.0;
};

NeighbourhoodAudit neighbourhood_audit(const Hypergraph& g, const WeightedLists& lists,
                                       const Correspondence& sigma, unsigned threads = 1);

} // namespace nibble
