#pragma once

#include "nibble/link.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace nibble {

/// L/N >= 3ek.
bool feasibility_check(double L, double N, std::uint32_t k);

/// Symmetric local lemma condition e p (d+1) <= 1.
bool lll_symmetric_check(double p, std::uint64_t d);

enum class FinishOutcome { Success, CapExhausted, EmptyList };

const char* to_string(FinishOutcome outcome);

struct ResampleEvent {
    NodeId u;
    NodeId w;
    Colour cu;
    Colour cw;
};

struct ResampleLog {
    std::uint64_t iterations = 0;
    std::vector<ResampleEvent> events; // the violated pair resampled at each iteration
    FinishOutcome outcome = FinishOutcome::Success;
};

struct FinishResult {
    std::vector<std::optional<Colour>> colours; // per node; all set on success
    ResampleLog log;
};

/// Colours every node by sampling from mu(v,.)/|L(v)|_mu and then, while some
/// adjacent pair blocks, resampling both nodes of the lowest violated pair.
/// iteration_cap defaults to 100 times the node count. Initial draws are
/// per-node counter streams, so the result does not depend on `threads`.
FinishResult finish(const VertexInstance& inst, std::uint64_t seed, std::optional<std::uint64_t> iteration_cap = {},
                    unsigned threads = 1);

/// The colour drawn for node u at its r-th sample.
Colour sample_colour(const VertexInstance& inst, std::uint64_t seed, NodeId u, std::uint64_t r);

} // namespace nibble
