#pragma once

#include "nibble/hypergraph.hpp"
#include "nibble/instance.hpp"
#include "nibble/lists.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nibble {

enum class GraphKind { Regular, Bipartite, Random, LinearUniform };

const char* to_string(GraphKind kind);
GraphKind graph_kind_from_string(const std::string& name);

struct GeneratorSpec {
    GraphKind kind = GraphKind::Regular;
    std::uint32_t n = 0;      // vertices (left side for bipartite)
    std::uint32_t n2 = 0;     // right side for bipartite
    std::uint32_t d = 0;      // degree for regular graphs
    double p = 0.0;           // edge probability for random and bipartite graphs
    std::uint32_t k = 3;      // uniformity for linear hypergraphs
    std::uint32_t edges = 0;  // target edge count for linear hypergraphs
    std::uint64_t seed = 0;
};

/// Deterministic per seed. Regular graphs pair stubs one at a time among
/// admissible pairs and restart on a dead end; linear hypergraphs accept
/// random k-sets greedily unless they share two vertices with an accepted
/// edge. Throws Generation on inadmissible parameters.
Hypergraph generate(const GeneratorSpec& spec);

enum class ListMode { Unit, Degree };

const char* to_string(ListMode mode);
ListMode list_mode_from_string(const std::string& name);

/// ceil((1 + eps) max deg) for edge e, with a 1e-9 guard against rounding up
/// an exact integer product.
std::uint32_t local_list_size(const Hypergraph& g, EdgeId e, double eps);

/// Each L(e) is a uniform random subset of [0, universe_size) of size
/// local_list_size(e). Unit mode weighs every colour 1; degree mode weighs it
/// 1/max deg. Throws Generation when the universe is too small.
WeightedLists build_local_lists(const Hypergraph& g, double eps, std::uint32_t universe_size, ListMode mode,
                                std::uint64_t seed);

/// Random correspondence: each adjacent pair independently, with probability
/// `density`, gets a uniformly random permutation of the universe.
std::vector<SigmaEntry> random_correspondence(const Hypergraph& g, std::uint32_t universe_size, double density,
                                              std::uint64_t seed);

} // namespace nibble
