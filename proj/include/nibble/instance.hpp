#pragma once

#include "nibble/colouring.hpp"
#include "nibble/correspondence.hpp"
#include "nibble/hypergraph.hpp"
#include "nibble/lists.hpp"

#include <filesystem>
#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace nibble {

/// One correspondence record as written in an instance file.
struct SigmaEntry {
    EdgeId e;
    EdgeId f;
    std::vector<std::pair<Colour, Colour>> map;
};

/// Complete colouring problem: hypergraph, colour universe [lo, hi],
/// weighted lists and edge correspondence.
struct Instance {
    Hypergraph graph;
    Colour universe_lo = 0;
    Colour universe_hi = 0;
    WeightedLists lists;
    std::vector<SigmaEntry> sigma_entries;
    Correspondence sigma;
};

/// Assembles an instance and derives the correspondence from the records.
/// Records that cannot form a permutation, or repeat an already seen pair,
/// are left out of the correspondence; validate_instance reports them.
Instance make_instance(Hypergraph graph, Colour lo, Colour hi, WeightedLists lists,
                       std::vector<SigmaEntry> sigma_entries = {});

struct InstanceIssue {
    enum class Kind { Uniformity, Linearity, Correspondence, WeightRange, Universe, DuplicateColour };

    Kind kind;
    std::string message;
};

const char* to_string(InstanceIssue::Kind kind);

/// Uniformity, linearity, correspondence consistency and weight-range checks.
/// Empty iff the instance is well formed.
std::vector<InstanceIssue> validate_instance(const Instance& inst);

nlohmann::json instance_to_json(const Instance& inst);
/// Throws Error(Parse) on malformed input.
Instance instance_from_json(const nlohmann::json& j);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const Instance& inst, const std::filesystem::path& path);

} // namespace nibble
