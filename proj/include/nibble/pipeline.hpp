#pragma once

#include "nibble/brute_force.hpp"
#include "nibble/driver.hpp"
#include "nibble/finisher.hpp"
#include "nibble/instance.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nibble {

enum class ColourMode { NibbleFinish, FinishOnly, Brute };

const char* to_string(ColourMode mode);
ColourMode colour_mode_from_string(const std::string& name);

/// Lists handed to the finisher for the edges the nibble left uncoloured.
enum class FinisherLists {
    Restricted, // original lists minus colours blocked by the partial colouring
    Working,    // the nibble's truncated and rescaled lists
};

const char* to_string(FinisherLists lists);
FinisherLists finisher_lists_from_string(const std::string& name);

struct PipelineOptions {
    ColourMode mode = ColourMode::NibbleFinish;
    DriveOptions drive;
    FinisherLists finisher_lists = FinisherLists::Restricted;
    std::optional<std::uint64_t> finish_cap; // default 100 * nodes
    std::uint64_t brute_cap = 10'000'000;
};

enum class PipelineStatus { Success, NibbleFailed, FinishFailed, Unsatisfiable, BruteCapExceeded };

const char* to_string(PipelineStatus status);

struct FinisherReport {
    std::vector<EdgeId> edges; // node -> original edge
    ResampleLog log;
};

struct PipelineResult {
    PipelineStatus status = PipelineStatus::Success;
    PartialColouring colouring;
    std::vector<Violation> violations; // against the original instance
    std::optional<DriveResult> drive;
    std::optional<FinisherReport> finisher;
    std::optional<BruteResult> brute;
    std::string detail;

    bool complete() const { return colouring.is_complete(); }
    bool success() const { return status == PipelineStatus::Success; }
};

/// Colours the instance in the requested mode. Success means a complete
/// colouring with no violations against the original lists and correspondence.
PipelineResult colour_instance(const Instance& inst, const PipelineOptions& options);

} // namespace nibble
