#pragma once

#include "nibble/hypergraph.hpp"
#include "nibble/lists.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nibble {

inline constexpr std::uint32_t default_enumeration_limit = 20;
inline constexpr double polytope_tolerance = 1e-9;

struct MembershipWitness {
    enum class Kind { Nonnegativity, Degree, OddSet };

    Kind kind;
    EdgeId edge = 0;                // Nonnegativity
    std::vector<VertexId> vertices; // Degree: one vertex; OddSet: the set W
    double lhs = 0.0;
    double bound = 0.0;
    double slack = 0.0; // bound - lhs; negative for a violation
};

const char* to_string(MembershipWitness::Kind kind);

struct MembershipVerdict {
    bool inside = true;
    std::optional<MembershipWitness> witness;
};

/// Whether x / (1 - shrink) lies in the matching polytope of a graph, by
/// nonnegativity, degree and odd-set constraints (all odd W, |W| >= 3).
/// The first violated constraint in the order nonnegativity (by edge),
/// degree (by vertex), odd sets (by ascending vertex bitmask) is the witness.
/// Throws Unsupported for k != 2, EnumerationLimit above vertex_limit vertices,
/// Range for shrink outside [0,1) and Precondition on a length mismatch.
MembershipVerdict edmonds_membership(const Hypergraph& g, const std::vector<double>& x, double shrink = 0.0,
                                     std::uint32_t vertex_limit = default_enumeration_limit);

/// x_e = 1/|L(e)|. Throws DivisionDomain on an empty list.
std::vector<double> lists_to_fractional(const WeightedLists& lists);

struct PolytopeWeights {
    WeightedLists lists;
    bool checked = false; // membership was verified (false: above the enumeration limit)
    std::optional<std::string> warning;
};

/// mu(e,c) = 1/((1-delta)|L(e)|) after checking that the list vector lies in
/// (1-delta) MP(G) when the graph is small enough to enumerate. Throws Range
/// for delta outside (0,1) or a weight above 1, Precondition when the
/// membership check fails.
PolytopeWeights polytope_lists_to_weights(const Hypergraph& g, const WeightedLists& lists, double delta,
                                          std::uint32_t vertex_limit = default_enumeration_limit);

/// mu(e,c) = 1 / max over v in e of deg(v).
WeightedLists degree_weights(const Hypergraph& g, const WeightedLists& lists);

} // namespace nibble
