#pragma once

#include "nibble/colouring.hpp"
#include "nibble/correspondence.hpp"
#include "nibble/hypergraph.hpp"
#include "nibble/lists.hpp"
#include "nibble/params.hpp"
#include "nibble/rng.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nibble {

/// Eq(e,v,c) = K / prod over N(e,v,c) of (1 - mu(f,c')/(L ln N)), clamped to
/// at most 1. `clamped` is set when the clamp was applied. Throws
/// DegenerateWeight if a factor is not positive, Precondition as
/// colour_neighbours does, and ParameterDomain via keep_probability.
double equalizing_probability(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma,
                              const NibbleParams& params, EdgeId e, VertexId v, Colour c,
                              bool* clamped = nullptr);

/// Every Bernoulli trial of one round, laid out per edge.
///
/// Pairs (e,c) of an edge are in ascending colour order. For pair i of edge e
/// and endpoint slot j (the j-th vertex of e), flip index i*k + j holds Eq and
/// the colour neighbours N(e,v_j,c) as (edge, index into that edge's pairs).
struct EdgePlan {
    std::vector<ListEntry> pairs;
    std::vector<double> activation;      // per pair
    std::vector<double> equalizer;       // per flip
    std::vector<std::uint8_t> clamped;   // per flip: Eq was clamped to 1
    std::vector<double> nbr_weight;      // per flip: |N(e,v,c)|_mu
    std::vector<std::uint32_t> nbr_begin; // per flip, plus one sentinel
    std::vector<std::pair<EdgeId, std::uint32_t>> nbrs;
};

struct RoundPlan {
    NibbleParams params;
    double keep = 0.0;
    std::uint32_t k = 2;
    std::vector<EdgePlan> edges;
    std::uint64_t clamped = 0;               // flips whose Eq was clamped to 1
    std::uint64_t neighbourhood_over = 0;    // flips with |N(e,v,c)|_mu > N

    std::uint64_t activation_count() const;
    std::uint64_t flip_count() const;
};

/// Builds the plan for the current lists. Edges with empty lists take no part.
RoundPlan plan_round(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma,
                     const NibbleParams& params, unsigned threads = 1);

/// Realised trials: assigned[e][i] for step (I), passed[e][i*k+j] for step (III).
struct RoundDraw {
    std::vector<std::vector<std::uint8_t>> assigned;
    std::vector<std::vector<std::uint8_t>> passed;
};

/// Step (I) and the coin flips of step (III), drawn from counter streams keyed
/// by (edge, colour) and (edge, vertex, colour).
RoundDraw draw_round(const Hypergraph& g, const RoundPlan& plan, const CounterRng& rng, unsigned threads = 1);

struct Resolution {
    std::vector<std::vector<std::uint8_t>> survives; // per edge, per pair
    std::vector<std::optional<Colour>> colour;       // lowest surviving assigned colour
    std::uint64_t conflict_removals = 0;
    std::uint64_t flip_failures = 0;
};

/// Steps (II) and (III) as a pure function of the draw. A pair survives iff
/// no colour neighbour was assigned and every flip passed; removal is wasteful,
/// i.e. it happens whether or not the pair itself was assigned.
Resolution resolve_round(const RoundPlan& plan, const RoundDraw& draw, unsigned threads = 1);

/// Deletes colours in ascending (weight, colour) order while the remaining
/// weighted size stays >= target, then scales weights so the size is exactly
/// target. Returns nullopt when the list is already below target.
std::optional<std::vector<ListEntry>> truncate_and_rescale(std::span<const ListEntry> list, double target);

enum class TargetPolicy {
    Schedule, // next list size from next_params; the measured N is reported only
    Measured, // next L = smallest surviving list, next N = largest neighbourhood
};

const char* to_string(TargetPolicy policy);
TargetPolicy target_policy_from_string(const std::string& name);

struct RoundStats {
    std::uint64_t activations = 0;
    std::uint64_t conflict_removals = 0;
    std::uint64_t flip_failures = 0;
    std::uint64_t clamped = 0;
    std::uint64_t neighbourhood_over = 0;

    RoundStats& operator+=(const RoundStats& other);
};

struct RoundOutcome {
    std::vector<EdgeColour> coloured;  // newly coloured edges, ascending
    WeightedLists surviving;           // after step (III), weights unchanged; empty for coloured edges
    WeightedLists lists;               // truncated and rescaled; empty for coloured edges
    std::vector<EdgeId> deficient;     // uncoloured edges below the target
    double target = 0.0;
    NextParams next{};
    RoundStats stats;
};

/// One round of the colouring procedure on every edge with a nonempty list.
/// Deterministic in (inputs, rng); independent of `threads`.
RoundOutcome run_round(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma,
                       const NibbleParams& params, const CounterRng& rng,
                       TargetPolicy policy = TargetPolicy::Schedule, ScheduleMode mode = ScheduleMode::Eps8,
                       unsigned threads = 1);

struct ListMeasure {
    double min_list = 0.0;          // min over active edges of |L(e)|_mu
    double max_neighbourhood = 0.0; // max over (e,v,c) of |N(e,v,c)|_mu
    EdgeId min_edge = 0;
    EdgeId max_edge = 0;
    VertexId max_vertex = 0;
    Colour max_colour = 0;
};

/// Extrema over the edges flagged in `active` (all edges when empty).
ListMeasure measure_lists(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma,
                          const std::vector<std::uint8_t>& active = {}, unsigned threads = 1);

} // namespace nibble
