#include "commands.hpp"

#include "nibble/diagnostics.hpp"
#include "nibble/errors.hpp"
#include "nibble/generate.hpp"
#include "nibble/params.hpp"
#include "nibble/pipeline.hpp"
#include "nibble/polytope.hpp"
#include "nibble/serialize.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fmt/format.h>
#include <ostream>

namespace nibble::cli {

namespace fs = std::filesystem;

namespace {

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EnumerationLimit: return exit_resource;
    case ErrorCode::ScheduleCollapse:
    case ErrorCode::NibbleFailure: return exit_cap;
    default: return exit_input;
    }
}

class Manifest {
public:
    Manifest(std::string command, const std::vector<std::string>& args)
        : command_(std::move(command)), args_(args), start_(std::chrono::steady_clock::now())
    {
    }

    nlohmann::json params = nlohmann::json::object();
    std::optional<std::uint64_t> seed;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;

    // Written to `path` when set, otherwise as one line on err.
    void emit(const std::string& path, int exit_code, std::ostream& err) const
    {
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
        nlohmann::json j = {
            {"command", command_},
            {"argv", args_},
            {"params", params},
            {"seed", seed ? nlohmann::json(*seed) : nlohmann::json(nullptr)},
            {"version", artifact_version},
            {"inputs", inputs},
            {"outputs", outputs},
            {"exit_code", exit_code},
            {"duration_seconds", elapsed.count()},
        };
        if (path.empty())
            err << "manifest: " << j.dump() << '\n';
        else
            write_text(path, j.dump(1) + "\n");
    }

private:
    std::string command_;
    std::vector<std::string> args_;
    std::chrono::steady_clock::time_point start_;
};

std::string sibling(const std::string& out, const char* suffix)
{
    if (out.empty() || out == "-")
        return {};
    fs::path p(out);
    p.replace_extension(suffix);
    return p.string();
}

void write_or_print(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-")
        out << text;
    else
        write_text(path, text);
}

Instance load_valid_instance(const std::string& path, std::ostream& err, bool& ok)
{
    Instance inst = read_instance(path);
    auto issues = validate_instance(inst);
    for (const auto& issue : issues)
        err << "invalid instance (" << to_string(issue.kind) << "): " << issue.message << '\n';
    ok = issues.empty();
    return inst;
}

struct GenOptions {
    std::string kind = "regular";
    std::uint32_t n = 0, n2 = 0, d = 0, k = 3, edges = 0, universe = 0;
    double p = 0.0, eps = 0.5, sigma_density = 0.0;
    std::string lists = "unit";
    std::uint64_t seed = 0;
    std::string out = "-";
    std::string manifest;
};

struct ColourOptions {
    std::string instance;
    std::string mode = "nibble+finish";
    std::uint64_t seed = 0;
    std::uint32_t retry_cap = 50;
    std::optional<std::uint64_t> iteration_cap;
    std::optional<std::uint32_t> round_cap;
    double eps = 0.25;
    std::string policy = "measured";
    std::string schedule_mode = "eps8";
    std::string finisher_lists = "restricted";
    std::uint64_t brute_cap = 10'000'000;
    std::string out;
    std::string trace;
    std::string manifest;
};

struct VerifyOptions {
    std::string instance;
    std::string colouring;
    bool require_complete = false;
    std::string manifest;
};

struct ScheduleOptions {
    double eps = 0.25;
    std::uint32_t k = 2;
    double delta = 0.0;
    std::string mode = "eps8";
    std::string out = "-";
    std::string manifest;
};

struct PolytopeOptions {
    std::string graph;
    std::string vector;
    double shrink = 0.0;
    std::uint32_t limit = default_enumeration_limit;
    std::string manifest;
};

struct DiagOptions {
    std::string instance;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double eps = 0.25;
    std::optional<double> L, N;
    std::string domain = "asymptotic";
    std::uint32_t exact_limit = exact_trial_limit;
    std::string out = "-";
    std::string manifest;
};

struct BruteOptions {
    std::string instance;
    std::uint64_t cap = 10'000'000;
    std::string out = "-";
    std::string manifest;
};

int cmd_gen(const GenOptions& o, Manifest& m, std::ostream& out, std::ostream& err)
{
    GeneratorSpec spec;
    spec.kind = graph_kind_from_string(o.kind);
    spec.n = o.n;
    spec.n2 = o.n2;
    spec.d = o.d;
    spec.p = o.p;
    spec.k = o.k;
    spec.edges = o.edges;
    spec.seed = o.seed;
    const Hypergraph g = generate(spec);

    std::uint32_t largest = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        largest = std::max(largest, local_list_size(g, e, o.eps));
    const std::uint32_t universe = o.universe ? o.universe : std::max<std::uint32_t>(1, 2 * largest);
    auto lists = build_local_lists(g, o.eps, universe, list_mode_from_string(o.lists), o.seed);
    std::vector<SigmaEntry> sigma;
    if (o.sigma_density > 0.0)
        sigma = random_correspondence(g, universe, o.sigma_density, o.seed);
    const Instance inst = make_instance(g, 0, universe - 1, std::move(lists), std::move(sigma));
    for (const auto& issue : validate_instance(inst))
        err << "warning: generated instance issue (" << to_string(issue.kind) << "): " << issue.message << '\n';

    m.params["universe"] = universe;
    write_or_print(o.out, instance_to_json(inst).dump(1) + "\n", out);
    if (o.out != "-")
        m.outputs.push_back(o.out);
    return exit_ok;
}

int cmd_colour(const ColourOptions& o, unsigned threads, Manifest& m, std::ostream& out, std::ostream& err)
{
    m.inputs.push_back(o.instance);
    bool ok = false;
    const Instance inst = load_valid_instance(o.instance, err, ok);
    if (!ok)
        return exit_input;

    PipelineOptions po;
    po.mode = colour_mode_from_string(o.mode);
    po.drive.eps = o.eps;
    po.drive.seed = o.seed;
    po.drive.retry_cap = o.retry_cap;
    po.drive.round_cap = o.round_cap;
    po.drive.policy = target_policy_from_string(o.policy);
    po.drive.mode = schedule_mode_from_string(o.schedule_mode);
    po.drive.threads = threads;
    po.finisher_lists = finisher_lists_from_string(o.finisher_lists);
    po.finish_cap = o.iteration_cap;
    po.brute_cap = o.brute_cap;

    const auto result = colour_instance(inst, po);
    write_or_print(o.out, colouring_to_json(result, po.mode).dump(1) + "\n", out);
    if (o.out != "-")
        m.outputs.push_back(o.out);
    const std::string trace = o.trace.empty() ? sibling(o.out, ".trace.csv") : o.trace;
    if (!trace.empty()) {
        write_text(trace, trace_to_csv(result.drive ? result.drive->trace : std::vector<TraceRow>{}));
        m.outputs.push_back(trace);
    }
    if (!result.success()) {
        err << "colouring failed (" << to_string(result.status) << "): " << result.detail << '\n';
        return exit_cap;
    }
    return exit_ok;
}

int cmd_verify(const VerifyOptions& o, Manifest& m, std::ostream& err)
{
    m.inputs = {o.instance, o.colouring};
    bool ok = false;
    const Instance inst = load_valid_instance(o.instance, err, ok);
    if (!ok)
        return exit_input;
    const int code = verify(inst, read_json(o.colouring), err);
    if (code == exit_ok && o.require_complete) {
        const auto gamma = colouring_from_json(read_json(o.colouring), inst.graph.edge_count());
        if (!gamma.is_complete()) {
            err << gamma.edge_count() - gamma.coloured_count() << " edges are uncoloured\n";
            return exit_verification;
        }
    }
    return code;
}

int cmd_schedule(const ScheduleOptions& o, std::ostream& out, std::ostream& err)
{
    try {
        const auto trace = simulate_schedule(o.eps, o.k, o.delta, schedule_mode_from_string(o.mode));
        write_or_print(o.out, schedule_to_csv(trace), out);
    } catch (const ScheduleCollapse& ex) {
        err << "schedule collapsed at round " << ex.round() << ": " << ex.what() << '\n';
        return exit_cap;
    }
    return exit_ok;
}

int cmd_polytope(const PolytopeOptions& o, Manifest& m, std::ostream& out)
{
    m.inputs.push_back(o.graph);
    const Instance inst = read_instance(o.graph);
    std::vector<double> x;
    if (o.vector.empty()) {
        x = lists_to_fractional(inst.lists);
    } else {
        m.inputs.push_back(o.vector);
        const auto j = read_json(o.vector);
        if (!j.is_object())
            throw Error(ErrorCode::Parse, "vector must be a JSON object {edge: value}");
        x.assign(inst.graph.edge_count(), 0.0);
        for (const auto& [key, value] : j.items()) {
            std::size_t used = 0;
            unsigned long e = 0;
            try {
                e = std::stoul(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (key.empty() || used != key.size() || e >= x.size())
                throw Error(ErrorCode::Parse, fmt::format("vector key '{}' is not an edge id", key));
            if (!value.is_number())
                throw Error(ErrorCode::Parse, fmt::format("vector entry '{}' is not a number", key));
            x[e] = value.get<double>();
        }
    }
    const auto verdict = edmonds_membership(inst.graph, x, o.shrink, o.limit);
    out << verdict_to_json(verdict).dump(1) << '\n';
    return verdict.inside ? exit_ok : exit_verification;
}

int cmd_diag(const DiagOptions& o, unsigned threads, Manifest& m, std::ostream& out, std::ostream& err)
{
    m.inputs.push_back(o.instance);
    if (o.trials == 0) {
        err << "--trials must be at least 1\n";
        return exit_input;
    }
    bool ok = false;
    const Instance inst = load_valid_instance(o.instance, err, ok);
    if (!ok)
        return exit_input;
    const auto audit = neighbourhood_audit(inst.graph, inst.lists, inst.sigma, threads);
    NibbleParams params{o.eps, inst.graph.k(), o.L.value_or(audit.extrema.min_list),
                        o.N.value_or(audit.extrema.max_neighbourhood),
                        o.domain == "probabilistic" ? ParamDomain::Probabilistic : ParamDomain::Asymptotic};
    if (o.domain != "probabilistic" && o.domain != "asymptotic")
        throw Error(ErrorCode::Precondition, fmt::format("unknown parameter domain '{}'", o.domain));
    const auto report =
        expectation_diagnostic(inst.graph, inst.lists, inst.sigma, params, o.trials, o.seed, threads, o.exact_limit);
    auto j = diagnostics_to_json(report);
    const auto& ex = audit.extrema;
    j["audit"] = {
        {"min_list_weight", ex.min_list},
        {"min_list_edge", ex.min_edge},
        {"max_neighbourhood_weight", ex.max_neighbourhood},
        {"max_neighbourhood_witness", {ex.max_edge, ex.max_vertex, ex.max_colour}},
        {"max_vertex_colour_sum", audit.max_vertex_sum},
    };
    write_or_print(o.out, j.dump(1) + "\n", out);
    if (o.out != "-")
        m.outputs.push_back(o.out);
    return exit_ok;
}

int cmd_brute(const BruteOptions& o, Manifest& m, std::ostream& out, std::ostream& err)
{
    m.inputs.push_back(o.instance);
    bool ok = false;
    const Instance inst = load_valid_instance(o.instance, err, ok);
    if (!ok)
        return exit_input;
    PipelineOptions po;
    po.mode = ColourMode::Brute;
    po.brute_cap = o.cap;
    const auto result = colour_instance(inst, po);
    write_or_print(o.out, colouring_to_json(result, po.mode).dump(1) + "\n", out);
    if (o.out != "-")
        m.outputs.push_back(o.out);
    if (!result.success()) {
        err << "no colouring: " << result.detail << '\n';
        return exit_cap;
    }
    return exit_ok;
}

template <class T>
nlohmann::json optional_json(const std::optional<T>& v)
{
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

} // namespace

int verify(const Instance& inst, const nlohmann::json& colouring, std::ostream& err)
{
    PartialColouring gamma;
    try {
        gamma = colouring_from_json(colouring, inst.graph.edge_count());
    } catch (const Error& ex) {
        err << "malformed colouring: " << ex.what() << '\n';
        return exit_input;
    }
    const auto violations = validate_colouring(inst.graph, inst.lists, inst.sigma, gamma);
    for (const auto& v : violations)
        err << "violation: " << v.describe() << '\n';
    return violations.empty() ? exit_ok : exit_verification;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"List edge colouring of graphs and linear hypergraphs by the nibble method", "nibble-colour"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = 1;
    app.add_option("--threads", threads, "worker threads (outputs do not depend on it)")
        ->envname("NIBBLE_COLOUR_THREADS")
        ->check(CLI::PositiveNumber);

    GenOptions gen;
    auto* g = app.add_subcommand("gen", "generate an instance");
    g->add_option("--kind", gen.kind, "regular | bipartite | random | linear")->capture_default_str();
    g->add_option("--n", gen.n, "vertices (left side for bipartite)")->required();
    g->add_option("--n2", gen.n2, "right side for bipartite");
    g->add_option("--d", gen.d, "degree for regular graphs");
    g->add_option("--p", gen.p, "edge probability for random and bipartite graphs");
    g->add_option("--k", gen.k, "uniformity for linear hypergraphs")->capture_default_str();
    g->add_option("--edges", gen.edges, "edge count for linear hypergraphs");
    g->add_option("--eps", gen.eps, "lists have ceil((1+eps) max degree) colours")->capture_default_str();
    g->add_option("--universe", gen.universe, "colour universe size (default twice the largest list)");
    g->add_option("--lists", gen.lists, "unit | degree")->capture_default_str();
    g->add_option("--sigma-density", gen.sigma_density, "fraction of adjacent pairs given a random correspondence");
    g->add_option("--seed", gen.seed)->capture_default_str();
    g->add_option("--out", gen.out, "instance file, - for stdout")->capture_default_str();
    g->add_option("--manifest", gen.manifest);

    ColourOptions col;
    auto* c = app.add_subcommand("colour", "colour an instance");
    c->add_option("instance", col.instance)->required()->check(CLI::ExistingFile);
    c->add_option("--mode", col.mode, "nibble+finish | finish-only | brute")->capture_default_str();
    c->add_option("--seed", col.seed)->capture_default_str();
    c->add_option("--retry-cap", col.retry_cap, "redraws allowed per nibble round")->capture_default_str();
    c->add_option("--iteration-cap", col.iteration_cap, "finisher resamples (default 100 per edge)");
    c->add_option("--round-cap", col.round_cap, "nibble rounds (default ceil(100 k ln N / eps))");
    c->add_option("--eps", col.eps)->capture_default_str();
    c->add_option("--policy", col.policy, "measured | schedule")->capture_default_str();
    c->add_option("--schedule-mode", col.schedule_mode, "eps8 | eps2 | expected")->capture_default_str();
    c->add_option("--finisher-lists", col.finisher_lists, "restricted | working")->capture_default_str();
    c->add_option("--brute-cap", col.brute_cap)->capture_default_str();
    c->add_option("--out", col.out, "colouring file, - for stdout")->required();
    c->add_option("--trace", col.trace, "round trace CSV (default next to --out)");
    c->add_option("--manifest", col.manifest);

    VerifyOptions ver;
    auto* v = app.add_subcommand("verify", "check a colouring");
    v->add_option("instance", ver.instance)->required();
    v->add_option("colouring", ver.colouring)->required();
    v->add_flag("--require-complete", ver.require_complete, "also fail when some edge is uncoloured");
    v->add_option("--manifest", ver.manifest);

    ScheduleOptions sch;
    auto* s = app.add_subcommand("schedule", "print the deterministic parameter schedule");
    s->add_option("--eps", sch.eps)->capture_default_str();
    s->add_option("--k", sch.k)->capture_default_str();
    s->add_option("--delta", sch.delta)->required();
    s->add_option("--mode", sch.mode, "eps8 | eps2 | expected")->capture_default_str();
    s->add_option("--out", sch.out)->capture_default_str();
    s->add_option("--manifest", sch.manifest);

    PolytopeOptions pol;
    auto* p = app.add_subcommand("polytope", "matching polytope membership");
    p->add_option("graph", pol.graph, "instance file providing the graph")->required();
    p->add_option("--vector", pol.vector, "JSON {edge: value}; default 1/|L(e)| from the lists");
    p->add_option("--shrink", pol.shrink)->capture_default_str();
    p->add_option("--limit", pol.limit, "vertex limit for odd-set enumeration")->capture_default_str();
    p->add_option("--manifest", pol.manifest);

    DiagOptions dia;
    auto* d = app.add_subcommand("diag", "expectation diagnostic of one round");
    d->add_option("instance", dia.instance)->required();
    d->add_option("--trials", dia.trials)->required();
    d->add_option("--seed", dia.seed)->capture_default_str();
    d->add_option("--eps", dia.eps)->capture_default_str();
    d->add_option("--L", dia.L, "default: smallest list weight");
    d->add_option("--N", dia.N, "default: largest neighbourhood weight");
    d->add_option("--domain", dia.domain, "asymptotic | probabilistic")->capture_default_str();
    d->add_option("--exact-limit", dia.exact_limit)->capture_default_str();
    d->add_option("--out", dia.out)->capture_default_str();
    d->add_option("--manifest", dia.manifest);

    BruteOptions bru;
    auto* b = app.add_subcommand("brute", "exhaustive search");
    b->add_option("instance", bru.instance)->required();
    b->add_option("--cap", bru.cap, "search node cap")->capture_default_str();
    b->add_option("--out", bru.out)->capture_default_str();
    b->add_option("--manifest", bru.manifest);

    std::vector<const char*> argv{"nibble-colour"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    auto* cmd = app.get_subcommands().front();
    Manifest manifest(cmd->get_name(), args);
    std::string manifest_path;
    int code = exit_ok;
    try {
        if (cmd == g) {
            manifest.seed = gen.seed;
            manifest.params = {{"kind", gen.kind}, {"n", gen.n}, {"n2", gen.n2}, {"d", gen.d}, {"p", gen.p},
                               {"k", gen.k}, {"edges", gen.edges}, {"eps", gen.eps}, {"lists", gen.lists},
                               {"sigma_density", gen.sigma_density}};
            manifest_path = gen.manifest.empty() ? sibling(gen.out, ".manifest.json") : gen.manifest;
            code = cmd_gen(gen, manifest, out, err);
        } else if (cmd == c) {
            manifest.seed = col.seed;
            manifest.params = {{"mode", col.mode},
                               {"retry_cap", col.retry_cap},
                               {"iteration_cap", optional_json(col.iteration_cap)},
                               {"round_cap", optional_json(col.round_cap)},
                               {"eps", col.eps},
                               {"policy", col.policy},
                               {"schedule_mode", col.schedule_mode},
                               {"finisher_lists", col.finisher_lists},
                               {"brute_cap", col.brute_cap}};
            manifest_path = col.manifest.empty() ? sibling(col.out, ".manifest.json") : col.manifest;
            code = cmd_colour(col, threads, manifest, out, err);
        } else if (cmd == v) {
            manifest.params = {{"require_complete", ver.require_complete}};
            manifest_path = ver.manifest;
            code = cmd_verify(ver, manifest, err);
        } else if (cmd == s) {
            manifest.params = {{"eps", sch.eps}, {"k", sch.k}, {"delta", sch.delta}, {"mode", sch.mode}};
            manifest_path = sch.manifest.empty() ? sibling(sch.out, ".manifest.json") : sch.manifest;
            code = cmd_schedule(sch, out, err);
        } else if (cmd == p) {
            manifest.params = {{"shrink", pol.shrink}, {"limit", pol.limit}};
            manifest_path = pol.manifest;
            code = cmd_polytope(pol, manifest, out);
        } else if (cmd == d) {
            manifest.seed = dia.seed;
            manifest.params = {{"trials", dia.trials}, {"eps", dia.eps}, {"L", optional_json(dia.L)},
                               {"N", optional_json(dia.N)}, {"domain", dia.domain},
                               {"exact_limit", dia.exact_limit}};
            manifest_path = dia.manifest.empty() ? sibling(dia.out, ".manifest.json") : dia.manifest;
            code = cmd_diag(dia, threads, manifest, out, err);
        } else if (cmd == b) {
            manifest.params = {{"cap", bru.cap}};
            manifest_path = bru.manifest.empty() ? sibling(bru.out, ".manifest.json") : bru.manifest;
            code = cmd_brute(bru, manifest, out, err);
        }
    } catch (const Error& ex) {
        err << to_string(ex.code()) << ": " << ex.what() << '\n';
        code = exit_code_for(ex.code());
    }
    try {
        manifest.emit(manifest_path, code, err);
    } catch (const Error& ex) {
        err << "cannot write manifest: " << ex.what() << '\n';
    }
    return code;
}

} // namespace nibble::cli
