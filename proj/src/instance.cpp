#include "nibble/instance.hpp"

#include "nibble/errors.hpp"

#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <map>
#include <json.hpp>
#include <optional>

namespace nibble {

namespace {

std::optional<Permutation> try_permutation(const SigmaEntry& entry)
{
    try {
        return Permutation::from_partial(entry.map);
    } catch (const Error&) {
        return std::nullopt;
    }
}

template <class T>
T get_field(const nlohmann::json& j, const char* name)
{
    if (!j.contains(name))
        throw Error(ErrorCode::Parse, fmt::format("instance is missing field '{}'", name));
    try {
        return j.at(name).get<T>();
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::Parse, fmt::format("field '{}': {}", name, ex.what()));
    }
}

EdgeId parse_edge_key(const std::string& key, std::uint32_t edge_count)
{
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != key.size() || key.empty())
        throw Error(ErrorCode::Parse, fmt::format("list key '{}' is not an edge id", key));
    if (value >= edge_count)
        throw Error(ErrorCode::Parse, fmt::format("list key {} is not an edge of the instance", key));
    return static_cast<EdgeId>(value);
}

} // namespace

Instance make_instance(Hypergraph graph, Colour lo, Colour hi, WeightedLists lists,
                       std::vector<SigmaEntry> sigma_entries)
{
    Instance inst;
    inst.graph = std::move(graph);
    inst.universe_lo = lo;
    inst.universe_hi = hi;
    inst.lists = std::move(lists);
    inst.sigma_entries = std::move(sigma_entries);

    const std::uint32_t m = inst.graph.edge_count();
    std::map<std::pair<EdgeId, EdgeId>, bool> seen;
    for (const auto& entry : inst.sigma_entries) {
        if (entry.e == entry.f || entry.e >= m || entry.f >= m)
            continue;
        auto key = std::minmax(entry.e, entry.f);
        if (!seen.emplace(key, true).second)
            continue;
        if (auto p = try_permutation(entry))
            inst.sigma.set(entry.e, entry.f, *p);
    }
    return inst;
}

const char* to_string(InstanceIssue::Kind kind)
{
    switch (kind) {
    case InstanceIssue::Kind::Uniformity: return "uniformity";
    case InstanceIssue::Kind::Linearity: return "linearity";
    case InstanceIssue::Kind::Correspondence: return "correspondence";
    case InstanceIssue::Kind::WeightRange: return "weight-range";
    case InstanceIssue::Kind::Universe: return "universe";
    case InstanceIssue::Kind::DuplicateColour: return "duplicate-colour";
    }
    return "unknown";
}

std::vector<InstanceIssue> validate_instance(const Instance& inst)
{
    using Kind = InstanceIssue::Kind;
    std::vector<InstanceIssue> issues;
    const auto& g = inst.graph;
    const std::uint32_t m = g.edge_count();

    for (EdgeId e = 0; e < m; ++e) {
        auto verts = g.edge(e);
        bool distinct = true;
        for (std::size_t i = 1; i < verts.size(); ++i)
            distinct = distinct && verts[i] != verts[i - 1];
        if (verts.size() != g.k() || !distinct)
            issues.push_back({Kind::Uniformity,
                              fmt::format("edge {} has {} vertices{} but k = {}", e, verts.size(),
                                          distinct ? "" : " with repeats", g.k())});
    }

    std::map<std::pair<VertexId, VertexId>, EdgeId> pair_owner;
    std::map<std::pair<EdgeId, EdgeId>, bool> reported;
    for (EdgeId e = 0; e < m; ++e) {
        auto verts = g.edge(e);
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                if (verts[i] == verts[j])
                    continue;
                auto [it, inserted] = pair_owner.emplace(std::pair{verts[i], verts[j]}, e);
                if (!inserted && it->second != e && reported.emplace(std::pair{it->second, e}, true).second)
                    issues.push_back({Kind::Linearity,
                                      fmt::format("edges {} and {} share at least two vertices", it->second, e)});
            }
    }

    if (inst.universe_lo > inst.universe_hi)
        issues.push_back({Kind::Universe, fmt::format("colour universe [{}, {}] is empty", inst.universe_lo,
                                                      inst.universe_hi)});
    auto in_universe = [&](Colour c) { return c >= inst.universe_lo && c <= inst.universe_hi; };

    if (inst.lists.edge_count() != m)
        issues.push_back({Kind::Universe, fmt::format("lists cover {} edges but the hypergraph has {}",
                                                      inst.lists.edge_count(), m)});
    for (EdgeId e = 0; e < std::min(m, inst.lists.edge_count()); ++e) {
        auto list = inst.lists.list(e);
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto& entry = list[i];
            if (!(entry.weight > 0.0 && entry.weight <= 1.0))
                issues.push_back({Kind::WeightRange, fmt::format("weight {} of colour {} on edge {} is outside (0, 1]",
                                                                 entry.weight, entry.colour, e)});
            if (!in_universe(entry.colour))
                issues.push_back({Kind::Universe, fmt::format("colour {} on edge {} is outside the universe [{}, {}]",
                                                              entry.colour, e, inst.universe_lo, inst.universe_hi)});
            if (i > 0 && list[i - 1].colour == entry.colour)
                issues.push_back({Kind::DuplicateColour, fmt::format("colour {} is listed twice on edge {}",
                                                                     entry.colour, e)});
        }
    }

    std::map<std::pair<EdgeId, EdgeId>, Permutation> canonical;
    for (const auto& entry : inst.sigma_entries) {
        if (entry.e >= m || entry.f >= m) {
            issues.push_back({Kind::Correspondence,
                              fmt::format("correspondence ({}, {}) references a missing edge", entry.e, entry.f)});
            continue;
        }
        if (entry.e == entry.f) {
            issues.push_back({Kind::Correspondence,
                              fmt::format("correspondence ({}, {}) pairs an edge with itself", entry.e, entry.f)});
            continue;
        }
        if (!g.adjacent(entry.e, entry.f))
            issues.push_back({Kind::Correspondence,
                              fmt::format("correspondence ({}, {}) is defined on non-adjacent edges", entry.e, entry.f)});
        for (auto [from, to] : entry.map)
            if (!in_universe(from) || !in_universe(to))
                issues.push_back({Kind::Correspondence,
                                  fmt::format("correspondence ({}, {}) maps {} -> {} outside the universe", entry.e,
                                              entry.f, from, to)});
        auto p = try_permutation(entry);
        if (!p) {
            issues.push_back({Kind::Correspondence,
                              fmt::format("correspondence ({}, {}) is not injective", entry.e, entry.f)});
            continue;
        }
        auto key = std::minmax(entry.e, entry.f);
        Permutation as_lo_hi = entry.e < entry.f ? *p : p->inverse();
        auto [it, inserted] = canonical.emplace(std::pair{key.first, key.second}, as_lo_hi);
        if (!inserted && !(it->second == as_lo_hi))
            issues.push_back({Kind::Correspondence,
                              fmt::format("sigma({}, {}) is not the inverse of sigma({}, {})", entry.e, entry.f,
                                          entry.f, entry.e)});
    }
    return issues;
}

nlohmann::json instance_to_json(const Instance& inst)
{
    nlohmann::json j;
    j["k"] = inst.graph.k();
    j["vertex_count"] = inst.graph.vertex_count();
    j["edges"] = inst.graph.edges();
    j["colour_universe"] = {inst.universe_lo, inst.universe_hi};
    nlohmann::json lists = nlohmann::json::object();
    for (EdgeId e = 0; e < inst.lists.edge_count(); ++e) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& entry : inst.lists.list(e))
            entries.push_back({{"colour", entry.colour}, {"weight", entry.weight}});
        lists[std::to_string(e)] = std::move(entries);
    }
    j["lists"] = std::move(lists);
    nlohmann::json sigma = nlohmann::json::array();
    for (const auto& entry : inst.sigma_entries) {
        nlohmann::json map = nlohmann::json::array();
        for (auto [from, to] : entry.map)
            map.push_back({from, to});
        sigma.push_back({{"e", entry.e}, {"f", entry.f}, {"map", std::move(map)}});
    }
    j["sigma"] = std::move(sigma);
    return j;
}

Instance instance_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw Error(ErrorCode::Parse, "instance must be a JSON object");
    const auto k = get_field<std::uint32_t>(j, "k");
    const auto n = get_field<std::uint32_t>(j, "vertex_count");
    auto edges = get_field<std::vector<std::vector<VertexId>>>(j, "edges");
    auto universe = get_field<std::vector<Colour>>(j, "colour_universe");
    if (universe.size() != 2)
        throw Error(ErrorCode::Parse, "colour_universe must be [lo, hi]");

    Hypergraph g;
    try {
        g = Hypergraph(k, n, std::move(edges));
    } catch (const Error& ex) {
        throw Error(ErrorCode::Parse, ex.what());
    }

    WeightedLists lists(g.edge_count());
    if (j.contains("lists")) {
        const auto& jl = j.at("lists");
        if (!jl.is_object())
            throw Error(ErrorCode::Parse, "lists must be an object keyed by edge id");
        for (const auto& [key, value] : jl.items()) {
            EdgeId e = parse_edge_key(key, g.edge_count());
            if (!value.is_array())
                throw Error(ErrorCode::Parse, fmt::format("list of edge {} must be an array", e));
            std::vector<ListEntry> entries;
            for (const auto& item : value) {
                try {
                    if (item.is_number_integer()) {
                        entries.push_back({item.get<Colour>(), 1.0});
                    } else {
                        double w = item.contains("weight") ? item.at("weight").get<double>() : 1.0;
                        entries.push_back({item.at("colour").get<Colour>(), w});
                    }
                } catch (const nlohmann::json::exception& ex) {
                    throw Error(ErrorCode::Parse, fmt::format("list of edge {}: {}", e, ex.what()));
                }
            }
            lists.set_list(e, std::move(entries));
        }
    }

    std::vector<SigmaEntry> sigma;
    if (j.contains("sigma")) {
        try {
            for (const auto& item : j.at("sigma")) {
                SigmaEntry entry{item.at("e").get<EdgeId>(), item.at("f").get<EdgeId>(), {}};
                for (const auto& pair : item.at("map"))
                    entry.map.emplace_back(pair.at(0).get<Colour>(), pair.at(1).get<Colour>());
                sigma.push_back(std::move(entry));
            }
        } catch (const nlohmann::json::exception& ex) {
            throw Error(ErrorCode::Parse, fmt::format("sigma: {}", ex.what()));
        }
    }
    return make_instance(std::move(g), universe[0], universe[1], std::move(lists), std::move(sigma));
}

Instance read_instance(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Parse, fmt::format("cannot open instance file {}", path.string()));
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorCode::Parse, fmt::format("{}: {}", path.string(), ex.what()));
    }
    return instance_from_json(j);
}

void write_instance(const Instance& inst, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::Parse, fmt::format("cannot write {}", path.string()));
    out << instance_to_json(inst).dump(1) << '\n';
}

} // namespace nibble
