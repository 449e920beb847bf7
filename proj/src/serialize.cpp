#include "nibble/serialize.hpp"

#include "nibble/errors.hpp"

#include <fmt/format.h>
#include <fstream>
#include <sstream>

namespace nibble {

std::string format_real(double x)
{
    return fmt::format("{}", x);
}

nlohmann::json colouring_to_json(const PipelineResult& result, ColourMode mode)
{
    nlohmann::json j;
    j["complete"] = result.complete();
    j["status"] = to_string(result.status);
    j["mode"] = to_string(mode);
    if (!result.detail.empty())
        j["detail"] = result.detail;

    nlohmann::json colours = nlohmann::json::object();
    for (EdgeId e = 0; e < result.colouring.edge_count(); ++e)
        if (auto c = result.colouring[e])
            colours[std::to_string(e)] = *c;
    j["colouring"] = std::move(colours);

    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : result.violations)
        violations.push_back(v.describe());
    j["violations"] = std::move(violations);

    if (result.drive) {
        const auto& d = *result.drive;
        j["nibble"] = {
            {"rounds", d.rounds},
            {"round_cap", d.round_cap},
            {"stop_reason", to_string(d.stop)},
            {"stop_detail", d.stop_detail},
            {"edges_coloured", d.colouring.coloured_count()},
            {"final_L", d.params.L},
            {"final_N", d.params.N},
            {"activations", d.stats.activations},
            {"conflict_removals", d.stats.conflict_removals},
            {"flip_failures", d.stats.flip_failures},
            {"clamped_equalizers", d.stats.clamped},
            {"neighbourhoods_over_N", d.stats.neighbourhood_over},
            {"warnings", d.warnings},
        };
    }
    if (result.finisher) {
        const auto& f = *result.finisher;
        nlohmann::json events = nlohmann::json::array();
        for (const auto& ev : f.log.events)
            events.push_back({f.edges[ev.u], f.edges[ev.w], ev.cu, ev.cw});
        j["finisher_log"] = {
            {"outcome", to_string(f.log.outcome)},
            {"iterations", f.log.iterations},
            {"nodes", f.edges.size()},
            {"events", std::move(events)},
        };
    }
    if (result.brute)
        j["brute"] = {{"status", to_string(result.brute->status)}, {"nodes", result.brute->nodes}};
    return j;
}

PartialColouring colouring_from_json(const nlohmann::json& j, std::uint32_t edge_count)
{
    if (!j.is_object() || !j.contains("colouring") || !j.at("colouring").is_object())
        throw Error(ErrorCode::Parse, "colouring file must contain a \"colouring\" object");
    PartialColouring out(edge_count);
    for (const auto& [key, value] : j.at("colouring").items()) {
        std::size_t used = 0;
        unsigned long e = 0;
        try {
            e = std::stoul(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (key.empty() || used != key.size())
            throw Error(ErrorCode::Parse, fmt::format("colouring key '{}' is not an edge id", key));
        if (e >= edge_count)
            throw Error(ErrorCode::Range, fmt::format("colouring references unknown edge {}", key));
        if (!value.is_number_unsigned())
            throw Error(ErrorCode::Parse, fmt::format("colour of edge {} is not a nonnegative integer", key));
        out.set(static_cast<EdgeId>(e), value.get<Colour>());
    }
    return out;
}

std::string trace_to_csv(const std::vector<TraceRow>& trace)
{
    std::ostringstream out;
    out << "round,L_i,N_i,ratio,edges_coloured,edges_remaining,retries,min_list_size,max_neighbourhood_size\n";
    for (const auto& r : trace)
        out << fmt::format("{},{},{},{},{},{},{},{},{}\n", r.round, format_real(r.L), format_real(r.N),
                           format_real(r.ratio), r.edges_coloured, r.edges_remaining, r.retries,
                           format_real(r.min_list_size), format_real(r.max_neighbourhood_size));
    return out.str();
}

std::string schedule_to_csv(const std::vector<ScheduleState>& trace)
{
    std::ostringstream out;
    out << "round,L_i,N_i,ratio\n";
    for (const auto& s : trace)
        out << fmt::format("{},{},{},{}\n", s.round, format_real(s.L), format_real(s.N), format_real(s.ratio));
    return out.str();
}

nlohmann::json diagnostics_to_json(const DiagnosticsReport& report)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& d : report.edges) {
        nlohmann::json row = {
            {"edge", d.edge},
            {"list_weight", d.list_weight},
            {"expected", d.expected},
            {"mean", d.mean},
            {"variance", d.variance},
            {"std_error", d.std_error},
            {"z", d.z},
            {"hypothesis", d.hypothesis},
        };
        if (d.exact)
            row["exact"] = *d.exact;
        edges.push_back(std::move(row));
    }
    return {
        {"eps", report.params.eps},
        {"k", report.params.k},
        {"L", report.params.L},
        {"N", report.params.N},
        {"K", report.keep},
        {"L_K_k", report.target},
        {"trials", report.trials},
        {"bernoulli_trials", report.bernoulli},
        {"exact_mode", report.exact_mode},
        {"edges", std::move(edges)},
    };
}

nlohmann::json verdict_to_json(const MembershipVerdict& verdict)
{
    nlohmann::json j;
    j["inside"] = verdict.inside;
    if (verdict.witness) {
        const auto& w = *verdict.witness;
        nlohmann::json witness = {
            {"kind", to_string(w.kind)},
            {"lhs", w.lhs},
            {"bound", w.bound},
            {"slack", w.slack},
        };
        if (w.kind == MembershipWitness::Kind::Nonnegativity)
            witness["edge"] = w.edge;
        else
            witness["vertices"] = w.vertices;
        j["witness"] = std::move(witness);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Parse, fmt::format("cannot write {}", path.string()));
    out << text;
}

nlohmann::json read_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Parse, fmt::format("cannot open {}", path.string()));
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::Parse, fmt::format("{}: {}", path.string(), ex.what()));
    }
}

} // namespace nibble
