#include "nibble/generate.hpp"

#include "nibble/errors.hpp"
#include "nibble/rng.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>
#include <set>

namespace nibble {

const char* to_string(GraphKind kind)
{
    switch (kind) {
    case GraphKind::Regular: return "regular";
    case GraphKind::Bipartite: return "bipartite";
    case GraphKind::Random: return "random";
    case GraphKind::LinearUniform: return "linear";
    }
    return "unknown";
}

GraphKind graph_kind_from_string(const std::string& name)
{
    if (name == "regular")
        return GraphKind::Regular;
    if (name == "bipartite")
        return GraphKind::Bipartite;
    if (name == "random")
        return GraphKind::Random;
    if (name == "linear")
        return GraphKind::LinearUniform;
    throw Error(ErrorCode::Generation, fmt::format("unknown graph kind '{}'", name));
}

const char* to_string(ListMode mode)
{
    switch (mode) {
    case ListMode::Unit: return "unit";
    case ListMode::Degree: return "degree";
    }
    return "unknown";
}

ListMode list_mode_from_string(const std::string& name)
{
    if (name == "unit")
        return ListMode::Unit;
    if (name == "degree")
        return ListMode::Degree;
    throw Error(ErrorCode::Generation, fmt::format("unknown list mode '{}'", name));
}

namespace {

constexpr std::uint32_t max_restarts = 1000;

std::vector<std::vector<VertexId>> regular_edges(std::uint32_t n, std::uint32_t d, SplitMix64& rng)
{
    if (d >= n && !(n == 0 && d == 0))
        throw Error(ErrorCode::Generation, fmt::format("degree d = {} must be below n = {}", d, n));
    if ((static_cast<std::uint64_t>(n) * d) % 2 != 0)
        throw Error(ErrorCode::Generation, fmt::format("n * d = {} * {} must be even", n, d));

    for (std::uint32_t restart = 0; restart < max_restarts; ++restart) {
        std::vector<VertexId> points;
        points.reserve(static_cast<std::size_t>(n) * d);
        for (VertexId v = 0; v < n; ++v)
            points.insert(points.end(), d, v);
        std::set<std::pair<VertexId, VertexId>> edges;
        auto suitable = [&](std::size_t i, std::size_t j) {
            return points[i] != points[j] && !edges.count(std::minmax(points[i], points[j]));
        };
        auto take = [&](std::size_t i, std::size_t j) {
            edges.insert(std::minmax(points[i], points[j]));
            if (i < j)
                std::swap(i, j);
            points[i] = points.back();
            points.pop_back();
            points[j] = points.back();
            points.pop_back();
        };

        bool stuck = false;
        while (!points.empty() && !stuck) {
            const std::size_t size = points.size();
            bool paired = false;
            for (std::size_t tries = 0; tries < 50 * size; ++tries) {
                const auto i = static_cast<std::size_t>(rng.below(size));
                const auto j = static_cast<std::size_t>(rng.below(size));
                if (suitable(i, j)) {
                    take(i, j);
                    paired = true;
                    break;
                }
            }
            if (paired)
                continue;
            std::vector<std::pair<std::size_t, std::size_t>> options;
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = i + 1; j < size; ++j)
                    if (suitable(i, j))
                        options.emplace_back(i, j);
            if (options.empty()) {
                stuck = true;
            } else {
                auto [i, j] = options[rng.below(options.size())];
                take(i, j);
            }
        }
        if (stuck)
            continue;
        std::vector<std::vector<VertexId>> out;
        for (auto [u, v] : edges)
            out.push_back({u, v});
        return out;
    }
    throw Error(ErrorCode::Generation,
                fmt::format("no {}-regular graph on {} vertices found after {} restarts", d, n, max_restarts));
}

std::vector<std::vector<VertexId>> linear_edges(std::uint32_t n, std::uint32_t k, std::uint32_t target,
                                                SplitMix64& rng)
{
    if (k < 2 || k > n)
        throw Error(ErrorCode::Generation, fmt::format("uniformity k = {} must lie in [2, n = {}]", k, n));
    std::vector<VertexId> pool(n);
    std::iota(pool.begin(), pool.end(), VertexId{0});
    std::set<std::pair<VertexId, VertexId>> covered;
    std::vector<std::vector<VertexId>> out;
    const std::uint64_t attempts = 100ULL * target + 1000;
    for (std::uint64_t a = 0; a < attempts && out.size() < target; ++a) {
        for (std::uint32_t i = 0; i < k; ++i)
            std::swap(pool[i], pool[i + rng.below(n - i)]);
        std::vector<VertexId> edge(pool.begin(), pool.begin() + k);
        std::sort(edge.begin(), edge.end());
        bool clash = false;
        for (std::uint32_t i = 0; i < k && !clash; ++i)
            for (std::uint32_t j = i + 1; j < k && !clash; ++j)
                clash = covered.count({edge[i], edge[j]}) > 0;
        if (clash)
            continue;
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = i + 1; j < k; ++j)
                covered.insert({edge[i], edge[j]});
        out.push_back(std::move(edge));
    }
    return out;
}

void check_probability(double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw Error(ErrorCode::Generation, fmt::format("edge probability {} is outside [0, 1]", p));
}

} // namespace

Hypergraph generate(const GeneratorSpec& spec)
{
    SplitMix64 rng(CounterRng(spec.seed).bits(Stream::Generator, {0}));
    switch (spec.kind) {
    case GraphKind::Regular:
        return Hypergraph(2, spec.n, regular_edges(spec.n, spec.d, rng));
    case GraphKind::Bipartite: {
        check_probability(spec.p);
        std::vector<std::vector<VertexId>> edges;
        for (VertexId u = 0; u < spec.n; ++u)
            for (VertexId v = 0; v < spec.n2; ++v)
                if (rng.uniform() < spec.p)
                    edges.push_back({u, spec.n + v});
        return Hypergraph(2, spec.n + spec.n2, std::move(edges));
    }
    case GraphKind::Random: {
        check_probability(spec.p);
        std::vector<std::vector<VertexId>> edges;
        for (VertexId u = 0; u < spec.n; ++u)
            for (VertexId v = u + 1; v < spec.n; ++v)
                if (rng.uniform() < spec.p)
                    edges.push_back({u, v});
        return Hypergraph(2, spec.n, std::move(edges));
    }
    case GraphKind::LinearUniform:
        return Hypergraph(spec.k, spec.n, linear_edges(spec.n, spec.k, spec.edges, rng));
    }
    throw Error(ErrorCode::Generation, "unknown graph kind");
}

std::uint32_t local_list_size(const Hypergraph& g, EdgeId e, double eps)
{
    const double raw = (1.0 + eps) * static_cast<double>(g.max_endpoint_degree(e));
    return static_cast<std::uint32_t>(std::ceil(raw - 1e-9));
}

WeightedLists build_local_lists(const Hypergraph& g, double eps, std::uint32_t universe_size, ListMode mode,
                                std::uint64_t seed)
{
    if (!(eps >= 0.0))
        throw Error(ErrorCode::Generation, fmt::format("eps = {} must be nonnegative", eps));
    WeightedLists lists(g.edge_count());
    const CounterRng base(seed);
    std::vector<Colour> pool(universe_size);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const std::uint32_t size = local_list_size(g, e, eps);
        if (size > universe_size)
            throw Error(ErrorCode::Generation, fmt::format("edge {} needs {} colours but the universe has {}", e,
                                                           size, universe_size));
        std::iota(pool.begin(), pool.end(), Colour{0});
        SplitMix64 rng(base.bits(Stream::Generator, {1, e}));
        for (std::uint32_t i = 0; i < size; ++i)
            std::swap(pool[i], pool[i + rng.below(universe_size - i)]);
        const double weight = mode == ListMode::Unit ? 1.0 : 1.0 / static_cast<double>(g.max_endpoint_degree(e));
        std::vector<ListEntry> entries;
        for (std::uint32_t i = 0; i < size; ++i)
            entries.push_back({pool[i], weight});
        lists.set_list(e, std::move(entries));
    }
    return lists;
}

std::vector<SigmaEntry> random_correspondence(const Hypergraph& g, std::uint32_t universe_size, double density,
                                              std::uint64_t seed)
{
    check_probability(density);
    const CounterRng base(seed);
    std::vector<SigmaEntry> out;
    std::vector<Colour> perm(universe_size);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (EdgeId f : g.neighbours(e)) {
            if (f <= e || base.uniform(Stream::Generator, {2, e, f}) >= density)
                continue;
            std::iota(perm.begin(), perm.end(), Colour{0});
            SplitMix64 rng(base.bits(Stream::Generator, {3, e, f}));
            rng.shuffle(perm.begin(), perm.end());
            SigmaEntry entry{e, f, {}};
            for (Colour c = 0; c < universe_size; ++c)
                if (perm[c] != c)
                    entry.map.emplace_back(c, perm[c]);
            if (!entry.map.empty())
                out.push_back(std::move(entry));
        }
    return out;
}

} // namespace nibble
