// Acceptance run: one PASS/FAIL line per criterion. Arguments select
// criteria by number; no arguments runs all of them.

#include "support.hpp"

#include "nibble/bounds.hpp"
#include "nibble/diagnostics.hpp"
#include "nibble/generate.hpp"
#include "nibble/params.hpp"
#include "nibble/pipeline.hpp"
#include "nibble/polytope.hpp"
#include "nibble/serialize.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

using namespace nibble;

namespace {

// Pinned tolerances.
constexpr double schedule_slack = 1e-12;     // relative, criterion 1
constexpr double exact_tolerance = 1e-9;     // absolute, criterion 2
constexpr double mc_standard_errors = 4.0;   // criterion 3
constexpr double truncation_tolerance = 1e-12; // relative, criterion 6
constexpr double subset_tolerance = 1e-12;   // relative, criterion 7

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

unsigned worker_count()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string fmt_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

double keep_of(double eps, double L, double N)
{
    return 1.0 - (N / L) * (1.0 + eps / 8.0) / std::log(N);
}

// ---- criterion 1 ----------------------------------------------------------

struct GridCount {
    int admissible = 0;
    int failures = 0;
    std::string first_failure;
};

GridCount schedule_grid(bool capped)
{
    GridCount out;
    for (double eps : {0.05, 0.1, 0.25})
        for (std::uint32_t k : {2u, 3u})
            for (double m : {1e3, 1e4, 1e5, 1e6}) {
                const double threshold = 8.0 * k / eps;
                double N = m * std::exp(threshold);
                if (capped)
                    N = std::min(N, 1e15);
                const double lnN = std::log(N);
                if (lnN < threshold)
                    continue;
                for (double ratio : {1 + eps + 0.01, 2.0, 3 * std::exp(1.0) * k - 0.01}) {
                    ++out.admissible;
                    const double L = ratio * N;
                    const auto next = next_params(NibbleParams{eps, k, L, N, ParamDomain::Asymptotic});
                    const bool l_ok = next.L >= (1 - 2.0 * k / lnN) * L * (1 - schedule_slack);
                    const bool n_ok = next.N >= (1 - 3.0 * k / lnN) * N * (1 - schedule_slack);
                    const bool r_ok =
                        next.L / next.N >= (1 + eps / (16 * lnN)) * ratio * (1 - schedule_slack);
                    if (!(l_ok && n_ok && r_ok) && out.failures++ == 0)
                        out.first_failure = "eps=" + fmt_double(eps) + " k=" + std::to_string(k) +
                                            " N=" + fmt_double(N) + " L/N=" + fmt_double(ratio);
                }
            }
    return out;
}

Outcome criterion_schedule()
{
    const auto capped = schedule_grid(true);
    const auto full = schedule_grid(false);
    const bool pass = capped.failures == 0 && full.failures == 0 && full.admissible > 0;
    std::string detail = std::to_string(full.admissible - full.failures) + "/" + std::to_string(full.admissible) +
                         " points of the uncapped grid hold; with N capped at 1e15 " +
                         std::to_string(capped.admissible) + " points meet ln N >= 8k/eps";
    if (!full.first_failure.empty())
        detail += "; first failure " + full.first_failure;
    return {pass, detail};
}

// ---- criterion 2 ----------------------------------------------------------

struct Micro {
    Instance inst;
    NibbleParams params;
};

// Simple graph with at most 4 edges and at most 6 (edge, colour) pairs, so a
// round has at most 18 Bernoulli trials. Every third instance has two edges
// with three colours whose weights sum to exactly L.
Micro micro_instance(std::uint64_t seed)
{
    SplitMix64 rng(CounterRng(seed).bits(Stream::Acceptance, {2}));
    const std::vector<std::vector<VertexId>> shapes[] = {
        {{0, 1}, {1, 2}},
        {{0, 1}, {2, 3}},
        {{0, 1}, {1, 2}, {0, 2}},
        {{0, 1}, {0, 2}, {0, 3}},
        {{0, 1}, {1, 2}, {2, 3}, {0, 3}},
        {{0, 1}, {1, 2}, {2, 3}},
    };
    if (seed % 3 == 0) {
        // K > 0 needs L/N > (1 + eps/8)/ln N; with L below 3 only N near e works.
        const auto& edges = shapes[rng.below(2)];
        const Hypergraph g(2, 4, edges);
        const double L = 2.85 + 0.05 * rng.uniform();
        WeightedLists lists(2);
        for (EdgeId e = 0; e < 2; ++e) {
            const double shift = 0.03 * rng.uniform();
            const double a = L / 3 + shift, b = L / 3 - shift;
            lists.set_list(e, {{0, a}, {1, b}, {2, L - a - b}});
        }
        const double N = 2.4 + 0.7 * rng.uniform();
        return {make_instance(g, 0, 2, lists, random_correspondence(g, 3, 0.5, seed)),
                NibbleParams{0.25, 2, L, N, ParamDomain::Probabilistic}};
    }
    const auto& edges = shapes[rng.below(std::size(shapes))];
    const Hypergraph g(2, 4, edges);
    const std::uint32_t m = g.edge_count();
    std::uint32_t budget = 6;
    WeightedLists lists(m);
    for (EdgeId e = 0; e < m; ++e) {
        const std::uint32_t remaining_edges = m - e - 1;
        const std::uint32_t most = std::min<std::uint32_t>(3, budget - remaining_edges);
        const std::uint32_t size = 1 + static_cast<std::uint32_t>(rng.below(most));
        budget -= size;
        std::vector<Colour> colours{0, 1, 2};
        rng.shuffle(colours.begin(), colours.end());
        std::vector<ListEntry> entries;
        for (std::uint32_t i = 0; i < size; ++i)
            entries.push_back({colours[i], 0.05 + 0.95 * rng.uniform()});
        std::sort(entries.begin(), entries.end(), [](auto& x, auto& y) { return x.colour < y.colour; });
        lists.set_list(e, entries);
    }
    // L at least large enough for K >= 0.1.
    const double N = 1.5 + 1.5 * rng.uniform();
    const double L = N * (1 + 0.25 / 8) / (0.9 * std::log(N)) * (1.0 + 2.0 * rng.uniform());
    return {make_instance(g, 0, 2, lists, random_correspondence(g, 3, 0.5, seed)),
            NibbleParams{0.25, 2, L, N, ParamDomain::Probabilistic}};
}

// Weight of the colour neighbours of (e, c) at v, straight from the definition.
double neighbour_weight(const Instance& inst, EdgeId e, VertexId v, Colour c)
{
    double w = 0.0;
    for (EdgeId f : inst.graph.incident(v)) {
        if (f == e)
            continue;
        for (const auto& entry : inst.lists.list(f))
            if (inst.sigma.map(f, e, entry.colour) == c)
                w += entry.weight;
    }
    return w;
}

Outcome criterion_exact()
{
    int instances = 0, edges = 0, normalized = 0, failures = 0;
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto [inst, params] = micro_instance(seed);
        const double K = keep_of(params.eps, params.L, params.N);
        const auto report = expectation_diagnostic(inst.graph, inst.lists, inst.sigma, params, 1, seed);
        if (!report.exact_mode || report.bernoulli > 20)
            return {false, "instance " + std::to_string(seed) + " has " + std::to_string(report.bernoulli) +
                               " Bernoulli trials"};
        ++instances;
        for (const auto& d : report.edges) {
            bool hypothesis = true;
            double size = 0.0;
            for (const auto& entry : inst.lists.list(d.edge)) {
                size += entry.weight;
                for (VertexId v : inst.graph.edge(d.edge))
                    hypothesis = hypothesis && neighbour_weight(inst, d.edge, v, entry.colour) <= params.N;
            }
            if (!hypothesis)
                continue;
            ++edges;
            const bool at_L = std::abs(size - params.L) <= 1e-12;
            normalized += at_L;
            const double expected = (at_L ? params.L : size) * std::pow(K, 2);
            const double err = std::abs(*d.exact - expected);
            worst = std::max(worst, err);
            failures += err > exact_tolerance;
        }
    }
    const bool pass = instances >= 50 && edges > 0 && failures == 0;
    return {pass, std::to_string(instances) + " instances, " + std::to_string(edges) +
                      " edges meeting the neighbourhood hypothesis (" + std::to_string(normalized) +
                      " with |L(e)| = L), max |E - |L(e)| K^k| = " + fmt_double(worst)};
}

// ---- criterion 3 ----------------------------------------------------------

Outcome criterion_monte_carlo()
{
    const auto g = support::path_graph(5);
    const auto lists = support::uniform_lists(5, 10);
    const NibbleParams params{0.25, 2, 10.0, 7.5, ParamDomain::Asymptotic};
    const double target = 10.0 * std::pow(keep_of(0.25, 10.0, 7.5), 2);
    const auto report = expectation_diagnostic(g, lists, {}, params, 100'000, 2024, worker_count());
    double worst = 0.0;
    for (const auto& d : report.edges)
        worst = std::max(worst, std::abs(d.mean - target) / d.std_error);
    const bool pass = report.edges.size() == 5 && worst <= mc_standard_errors;
    return {pass, "L K^k = " + fmt_double(target) + ", largest deviation " + fmt_double(worst) +
                      " standard errors over 1e5 trials"};
}

// ---- criterion 4 ----------------------------------------------------------

Instance oracle_instance(std::uint64_t seed)
{
    SplitMix64 rng(CounterRng(seed).bits(Stream::Acceptance, {4}));
    GeneratorSpec spec;
    spec.kind = GraphKind::Random;
    spec.n = 4 + static_cast<std::uint32_t>(rng.below(3));
    spec.p = 0.3 + 0.5 * rng.uniform();
    spec.seed = seed;
    auto edges = generate(spec).edges();
    if (edges.empty())
        edges = {{0, 1}, {1, 2}, {0, 2}};
    if (edges.size() > 8)
        edges.resize(8);
    const Hypergraph g(2, spec.n, edges);
    const std::uint32_t universe = 5;
    WeightedLists lists(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::vector<Colour> colours{0, 1, 2, 3, 4};
        rng.shuffle(colours.begin(), colours.end());
        const auto size = 1 + rng.below(4);
        std::vector<ListEntry> entries;
        for (std::uint64_t i = 0; i < size; ++i)
            entries.push_back({colours[i], seed % 2 ? 1.0 : 0.1 + 0.9 * rng.uniform()});
        std::sort(entries.begin(), entries.end(), [](auto& x, auto& y) { return x.colour < y.colour; });
        lists.set_list(e, entries);
    }
    return make_instance(g, 0, universe - 1, lists, random_correspondence(g, universe, 0.5, seed));
}

Outcome criterion_oracle()
{
    int successes = 0, unsat = 0, verify_failures = 0, contradictions = 0, produced = 0;
    std::ostringstream sink;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto inst = oracle_instance(seed);
        const auto brute = brute_force_colour(inst.graph, inst.lists, inst.sigma);
        unsat += brute.status == BruteStatus::Unsatisfiable;
        for (auto mode : {ColourMode::NibbleFinish, ColourMode::FinishOnly, ColourMode::Brute}) {
            PipelineOptions options;
            options.mode = mode;
            options.drive.seed = seed;
            const auto result = colour_instance(inst, options);
            ++produced;
            if (cli::verify(inst, colouring_to_json(result, mode), sink) != cli::exit_ok)
                ++verify_failures;
            if (result.success()) {
                ++successes;
                if (brute.status == BruteStatus::Unsatisfiable)
                    ++contradictions;
            }
        }
    }
    const bool pass = verify_failures == 0 && contradictions == 0;
    return {pass, std::to_string(produced) + " colourings from 200 instances (" + std::to_string(successes) +
                      " complete, " + std::to_string(unsat) + " instances proven unsatisfiable), " +
                      std::to_string(verify_failures) + " rejected by verify, " + std::to_string(contradictions) +
                      " successes on unsatisfiable instances"};
}

// ---- criterion 5 ----------------------------------------------------------

// 4-regular graph: every edge meets six others, so with unit weights each
// (node, colour) has neighbourhood weight at most 6. Lists of 100 colours.
Instance finisher_instance(std::uint64_t seed)
{
    GeneratorSpec spec;
    spec.kind = GraphKind::Regular;
    spec.n = 30;
    spec.d = 4;
    spec.seed = seed;
    const auto g = generate(spec);
    const std::uint32_t universe = 150;
    SplitMix64 rng(CounterRng(seed).bits(Stream::Acceptance, {5}));
    WeightedLists lists(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::vector<Colour> colours(universe);
        for (Colour c = 0; c < universe; ++c)
            colours[c] = c;
        rng.shuffle(colours.begin(), colours.end());
        colours.resize(100);
        std::sort(colours.begin(), colours.end());
        std::vector<ListEntry> entries;
        for (Colour c : colours)
            entries.push_back({c, 1.0});
        lists.set_list(e, entries);
    }
    return make_instance(g, 0, universe - 1, lists, random_correspondence(g, universe, 0.5, seed));
}

Outcome criterion_finisher()
{
    int succeeded = 0;
    double resamples = 0.0, max_neighbourhood = 0.0, min_list = 1e300;
    std::uint32_t nodes = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = finisher_instance(seed);
        const auto& g = inst.graph;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            min_list = std::min(min_list, inst.lists.size(e));
            for (const auto& entry : inst.lists.list(e)) {
                double w = 0.0;
                for (VertexId v : g.edge(e))
                    w += neighbour_weight(inst, e, v, entry.colour);
                max_neighbourhood = std::max(max_neighbourhood, w);
            }
        }
        PipelineOptions options;
        options.mode = ColourMode::FinishOnly;
        options.drive.seed = seed;
        const auto result = colour_instance(inst, options);
        succeeded += result.success();
        resamples += static_cast<double>(result.finisher->log.iterations);
        nodes = g.edge_count();
    }
    const double mean = resamples / 20.0;
    const bool regime = min_list >= 100.0 && max_neighbourhood <= 6.0;
    const bool pass = regime && succeeded == 20 && mean <= nodes;
    return {pass, std::to_string(succeeded) + "/20 succeeded, mean resamples " + fmt_double(mean) + " for " +
                      std::to_string(nodes) + " nodes (L = " + fmt_double(min_list) +
                      ", max neighbourhood weight " + fmt_double(max_neighbourhood) + ")"};
}

// ---- criterion 6 ----------------------------------------------------------

Outcome criterion_truncation()
{
    SplitMix64 rng(CounterRng(6).bits(Stream::Acceptance, {6}));
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto size = 1 + rng.below(80);
        std::vector<ListEntry> list;
        double total = 0.0;
        for (Colour c = 0; c < size; ++c) {
            const double w = trial % 4 == 0 ? 1.0 : 0.01 + 0.99 * rng.uniform();
            list.push_back({c * 3, w});
            total += w;
        }
        // Round size L of the schedule, with the surviving list between L/2
        // and L as after a round.
        const double target = total * (0.5 + 0.5 * rng.uniform());
        const double L = target * (1.0 + rng.uniform());
        const auto out = truncate_and_rescale(list, target);
        bool ok = out.has_value();
        if (ok) {
            double sum = 0.0;
            for (const auto& entry : *out) {
                sum += entry.weight;
                const auto it = std::find_if(list.begin(), list.end(),
                                             [&](const ListEntry& x) { return x.colour == entry.colour; });
                ok = ok && it != list.end();
                if (it == list.end())
                    break;
                ok = ok && entry.weight <= it->weight * (1 + truncation_tolerance);
                ok = ok && entry.weight >= (1 - 2 / L) * it->weight * (1 - truncation_tolerance);
            }
            ok = ok && std::abs(sum - target) <= truncation_tolerance * target;
        }
        failures += !ok;
    }
    return {failures == 0, std::to_string(1000 - failures) + "/1000 lists meet the size and weight bounds"};
}

// ---- criterion 7 ----------------------------------------------------------

Outcome criterion_binomial()
{
    SplitMix64 rng(CounterRng(7).bits(Stream::Acceptance, {7}));
    int bound_failures = 0, match_failures = 0, brute = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto n = static_cast<std::uint32_t>(1 + rng.below(20));
        const auto k = static_cast<std::uint32_t>(1 + rng.below(std::min<std::uint32_t>(6, n)));
        std::vector<double> p(n);
        for (auto& x : p)
            x = 1e-3 + rng.uniform() * (trial % 2 ? 1.0 : 0.2);
        const auto b = weighted_binom_bound(p, k);
        bound_failures += !(b.lhs <= b.rhs);
        if (n <= 12) {
            ++brute;
            double total = 0.0;
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                if (static_cast<std::uint32_t>(__builtin_popcount(mask)) != k)
                    continue;
                double prod = 1.0;
                for (std::uint32_t i = 0; i < n; ++i)
                    if (mask >> i & 1)
                        prod *= p[i];
                total += prod;
            }
            match_failures += std::abs(b.lhs - total) > subset_tolerance * total;
        }
    }
    return {bound_failures == 0 && match_failures == 0,
            std::to_string(bound_failures) + " bound violations in 1000 inputs, " + std::to_string(match_failures) +
                " mismatches against subset enumeration in " + std::to_string(brute)};
}

// ---- criterion 8 ----------------------------------------------------------

std::vector<std::vector<double>> matching_indicators(const Hypergraph& g)
{
    std::vector<std::vector<double>> out;
    for (std::uint32_t mask = 0; mask < (1u << g.edge_count()); ++mask) {
        std::uint64_t used = 0;
        bool ok = true;
        for (EdgeId e = 0; e < g.edge_count() && ok; ++e)
            if (mask >> e & 1)
                for (VertexId v : g.edge(e)) {
                    ok = ok && !(used >> v & 1);
                    used |= std::uint64_t{1} << v;
                }
        if (!ok)
            continue;
        std::vector<double> x(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            x[e] = mask >> e & 1;
        out.push_back(std::move(x));
    }
    return out;
}

Outcome criterion_edmonds()
{
    const auto tri = edmonds_membership(support::triangle(), {0.5, 0.5, 0.5});
    const bool triangle_ok =
        !tri.inside && tri.witness && tri.witness->kind == MembershipWitness::Kind::OddSet;

    std::vector<Hypergraph> graphs{support::triangle(),
                                   Hypergraph(2, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
                                   Hypergraph(2, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                                                     {2, 3}, {2, 4}, {3, 4}}),
                                   Hypergraph(2, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}})};
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        GeneratorSpec spec;
        spec.kind = GraphKind::Random;
        spec.n = 7;
        spec.p = 0.45;
        spec.seed = seed;
        auto edges = generate(spec).edges();
        if (edges.size() > 12)
            edges.resize(12);
        if (!edges.empty())
            graphs.emplace_back(2, 7, edges);
    }

    int indicators = 0, rejected = 0;
    std::vector<std::vector<std::vector<double>>> all;
    for (const auto& g : graphs) {
        all.push_back(matching_indicators(g));
        for (const auto& x : all.back()) {
            ++indicators;
            rejected += !edmonds_membership(g, x).inside;
        }
    }

    SplitMix64 rng(CounterRng(8).bits(Stream::Acceptance, {8}));
    auto combination = [&](std::size_t gi) {
        const auto& ms = all[gi];
        std::vector<double> x(graphs[gi].edge_count(), 0.0);
        std::vector<double> coef(ms.size());
        double total = 0.0;
        for (auto& c : coef)
            total += c = -std::log(1.0 - rng.uniform());
        for (std::size_t i = 0; i < ms.size(); ++i)
            for (std::size_t e = 0; e < x.size(); ++e)
                x[e] += coef[i] / total * ms[i][e];
        return x;
    };
    int combos_rejected = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto gi = rng.below(graphs.size());
        combos_rejected += !edmonds_membership(graphs[gi], combination(gi)).inside;
    }

    // Larger shrink scales the vector up, so membership can only be lost.
    int monotone_failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto gi = rng.below(graphs.size());
        auto x = combination(gi);
        const double scale = 0.5 + rng.uniform();
        for (auto& v : x)
            v *= scale;
        bool previous = true;
        for (int s = 0; s <= 18; ++s) {
            const bool inside = edmonds_membership(graphs[gi], x, 0.05 * s).inside;
            monotone_failures += inside && !previous;
            previous = inside;
        }
    }

    const bool pass = triangle_ok && rejected == 0 && combos_rejected == 0 && monotone_failures == 0;
    return {pass, std::string("triangle half vector ") + (triangle_ok ? "rejected by an odd set" : "NOT rejected") +
                      ", " + std::to_string(indicators - rejected) + "/" + std::to_string(indicators) +
                      " matchings and " + std::to_string(100 - combos_rejected) +
                      "/100 convex combinations accepted, " + std::to_string(monotone_failures) +
                      " monotonicity breaks in 50 vectors"};
}

// ---- criterion 9 ----------------------------------------------------------

Instance smoke_instance(std::uint64_t seed)
{
    GeneratorSpec spec;
    spec.kind = GraphKind::Regular;
    spec.n = 200;
    spec.d = 16;
    spec.seed = seed;
    const auto g = generate(spec);
    // Lists of ceil(1.5 * 16) = 24 colours from a universe of twice that.
    auto lists = build_local_lists(g, 0.5, 48, ListMode::Unit, seed);
    return make_instance(g, 0, 47, std::move(lists));
}

Outcome criterion_smoke()
{
    int complete = 0;
    double slowest = 0.0;
    std::string failures;
    std::ostringstream sink;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto inst = smoke_instance(seed);
        PipelineOptions options;
        options.drive.seed = seed;
        options.drive.eps = 0.5;
        options.drive.retry_cap = 50;
        options.drive.threads = worker_count();
        const auto start = Clock::now();
        const auto result = colour_instance(inst, options);
        slowest = std::max(slowest, seconds_since(start));
        const bool ok = result.success() && result.complete() &&
                        cli::verify(inst, colouring_to_json(result, options.mode), sink) == cli::exit_ok;
        complete += ok;
        if (!ok)
            failures += " " + std::to_string(seed) + "(" + to_string(result.status) + ")";
    }
    const bool pass = complete >= 18 && slowest < 60.0;
    std::string detail = std::to_string(complete) + "/20 seeds complete and valid, slowest run " +
                         fmt_double(slowest) + " s";
    if (!failures.empty())
        detail += "; failed seeds:" + failures;
    return {pass, detail};
}

// ---- criterion 10 ---------------------------------------------------------

Outcome criterion_determinism()
{
    support::TempDir dir("acceptance");
    int compared = 0, mismatches = 0, errors = 0;
    std::string first;

    // Runs `args` once per thread count, writing to <stem>.t<threads>, and
    // compares every artifact byte for byte.
    auto check = [&](const std::string& stem, std::vector<std::string> args, bool has_trace) {
        std::vector<std::string> outputs;
        for (const char* threads : {"1", "4", "1"}) {
            const auto out = (dir / (stem + ".t" + threads + "." + std::to_string(outputs.size()))).string();
            auto full = args;
            full.insert(full.begin(), {"--threads", threads});
            full.insert(full.end(), {"--out", out});
            const auto r = support::run_cli(full);
            errors += r.code == cli::exit_input || r.code == cli::exit_resource;
            std::string bytes = support::slurp(out);
            errors += bytes.empty();
            if (has_trace)
                bytes += "\n--trace--\n" + support::slurp(std::filesystem::path(out).replace_extension(".trace.csv"));
            outputs.push_back(bytes);
        }
        for (std::size_t i = 1; i < outputs.size(); ++i) {
            ++compared;
            if (outputs[i] != outputs[0] && mismatches++ == 0)
                first = stem;
        }
    };

    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto micro = micro_instance(seed);
        const auto file = (dir / ("micro" + std::to_string(seed) + ".json")).string();
        write_instance(micro.inst, file);
        check("micro" + std::to_string(seed),
              {"diag", file, "--trials", "1000", "--seed", std::to_string(seed), "--domain", "probabilistic", "--L",
               format_real(micro.params.L), "--N", format_real(micro.params.N)},
              false);
    }
    {
        const auto file = (dir / "path.json").string();
        write_instance(make_instance(support::path_graph(5), 0, 9, support::uniform_lists(5, 10)), file);
        check("path", {"diag", file, "--trials", "100000", "--seed", "2024", "--L", "10", "--N", "7.5"}, false);
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto file = (dir / ("oracle" + std::to_string(seed) + ".json")).string();
        write_instance(oracle_instance(seed), file);
        for (const char* mode : {"nibble+finish", "finish-only"})
            check("oracle" + std::to_string(seed) + mode,
                  {"colour", file, "--mode", mode, "--seed", std::to_string(seed)}, true);
        check("oracle-brute" + std::to_string(seed), {"brute", file}, false);
    }
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto file = (dir / ("finisher" + std::to_string(seed) + ".json")).string();
        write_instance(finisher_instance(seed), file);
        check("finisher" + std::to_string(seed),
              {"colour", file, "--mode", "finish-only", "--seed", std::to_string(seed)}, true);
    }
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const auto file = (dir / ("smoke" + std::to_string(seed) + ".json")).string();
        write_instance(smoke_instance(seed), file);
        check("smoke" + std::to_string(seed), {"colour", file, "--seed", std::to_string(seed), "--eps", "0.5"}, true);
    }

    const bool pass = mismatches == 0 && errors == 0 && compared > 0;
    std::string detail = std::to_string(compared - mismatches) + "/" + std::to_string(compared) +
                         " artifact comparisons identical across --threads 1 and 4";
    if (errors)
        detail += ", " + std::to_string(errors) + " runs failed on input or wrote nothing";
    if (!first.empty())
        detail += "; first mismatch in " + first;
    return {pass, detail};
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> criteria{
        {1, "schedule inequalities", 1.0, criterion_schedule},
        {2, "exact expectation", 30.0, criterion_exact},
        {3, "Monte Carlo consistency", 60.0, criterion_monte_carlo},
        {4, "oracle agreement", 120.0, criterion_oracle},
        {5, "finisher regime", 60.0, criterion_finisher},
        {6, "truncation contract", 5.0, criterion_truncation},
        {7, "weighted binomial inequality", 10.0, criterion_binomial},
        {8, "matching polytope checks", 30.0, criterion_edmonds},
        {9, "end-to-end smoke", 20 * 60.0, criterion_smoke},
        {10, "determinism across thread counts", 600.0, criterion_determinism},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i)
        selected.push_back(std::atoi(argv[i]));

    int failed = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end())
            continue;
        const auto start = Clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& ex) {
            outcome = {false, std::string("threw: ") + ex.what()};
        }
        const double elapsed = seconds_since(start);
        const bool in_time = elapsed < c.limit_seconds;
        const bool pass = outcome.pass && in_time;
        failed += !pass;
        std::printf("[%s] criterion %d, %s: %s (%.2f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    outcome.detail.c_str(), elapsed, c.limit_seconds, in_time ? "" : ", exceeded");
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
