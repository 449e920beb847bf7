#pragma once

#include "nibble/diagnostics.hpp"
#include "nibble/driver.hpp"
#include "nibble/params.hpp"
#include "nibble/pipeline.hpp"
#include "nibble/polytope.hpp"

#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

namespace nibble {

inline constexpr const char* artifact_version = "0.1.0";

/// {"complete", "status", "mode", "colouring": {edge: colour}, ...} plus the
/// nibble summary and finisher log when present.
nlohmann::json colouring_to_json(const PipelineResult& result, ColourMode mode);

/// Reads the "colouring" object of a colouring file. Throws Parse on malformed
/// input and Range when an edge id is not below edge_count.
PartialColouring colouring_from_json(const nlohmann::json& j, std::uint32_t edge_count);

/// round,L_i,N_i,ratio,edges_coloured,edges_remaining,retries,min_list_size,max_neighbourhood_size
std::string trace_to_csv(const std::vector<TraceRow>& trace);

/// round,L_i,N_i,ratio for the deterministic schedule.
std::string schedule_to_csv(const std::vector<ScheduleState>& trace);

nlohmann::json diagnostics_to_json(const DiagnosticsReport& report);
nlohmann::json verdict_to_json(const MembershipVerdict& verdict);

/// Fixed-format real: shortest representation that round-trips.
std::string format_real(double x);

void write_text(const std::filesystem::path& path, const std::string& text);
nlohmann::json read_json(const std::filesystem::path& path);

} // namespace nibble
