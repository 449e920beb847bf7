#pragma once

#include "commands.hpp"
#include "nibble/hypergraph.hpp"
#include "nibble/lists.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

namespace support {

using nibble::Colour;
using nibble::EdgeId;
using nibble::VertexId;

/// Path v0 - v1 - ... - v_m with edge i = {v_i, v_{i+1}}.
inline nibble::Hypergraph path_graph(std::uint32_t edges)
{
    std::vector<std::vector<VertexId>> es;
    for (VertexId i = 0; i < edges; ++i)
        es.push_back({i, i + 1});
    return nibble::Hypergraph(2, edges + 1, es);
}

/// Star with centre 0 and leaves 1..leaves.
inline nibble::Hypergraph star_graph(std::uint32_t leaves)
{
    std::vector<std::vector<VertexId>> es;
    for (VertexId i = 1; i <= leaves; ++i)
        es.push_back({0, i});
    return nibble::Hypergraph(2, leaves + 1, es);
}

inline nibble::Hypergraph triangle()
{
    return nibble::Hypergraph(2, 3, {{0, 1}, {1, 2}, {0, 2}});
}

inline nibble::WeightedLists make_lists(const std::vector<std::vector<Colour>>& colours, double weight = 1.0)
{
    nibble::WeightedLists lists(static_cast<std::uint32_t>(colours.size()));
    for (EdgeId e = 0; e < colours.size(); ++e) {
        std::vector<nibble::ListEntry> entries;
        for (Colour c : colours[e])
            entries.push_back({c, weight});
        lists.set_list(e, entries);
    }
    return lists;
}

/// Same colours 0..size-1 on every edge.
inline nibble::WeightedLists uniform_lists(std::uint32_t edges, std::uint32_t size, double weight = 1.0)
{
    std::vector<Colour> colours(size);
    for (Colour c = 0; c < size; ++c)
        colours[c] = c;
    return make_lists(std::vector<std::vector<Colour>>(edges, colours), weight);
}

inline std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Scratch directory removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag)
    {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("nibble-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

inline CliRun run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = nibble::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace support
