#pragma once

#include "nibble/hypergraph.hpp"

#include <map>
#include <utility>
#include <vector>

namespace nibble {

/// Finite-support permutation of colours; identity outside its support.
class Permutation {
public:
    Permutation() = default;

    /// Builds a permutation from a partial injective map. Chains a -> ... -> z
    /// with z outside the domain are closed by z -> a, so {1 -> 7} becomes the
    /// transposition (1 7). Throws Precondition if the map is not injective.
    static Permutation from_partial(const std::vector<std::pair<Colour, Colour>>& pairs);

    Colour apply(Colour c) const;
    Colour apply_inverse(Colour c) const;
    Permutation inverse() const;

    bool is_identity() const noexcept { return forward_.empty(); }

    /// Non-fixed points, ascending by source colour.
    const std::map<Colour, Colour>& moved() const noexcept { return forward_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::map<Colour, Colour> forward_;
    std::map<Colour, Colour> backward_;
};

/// Edge correspondence: a colour permutation sigma(e,f) for each pair of
/// adjacent edges with sigma(f,e) = sigma(e,f)^-1. Unset pairs are the
/// identity, so plain list colouring needs no configuration.
class Correspondence {
public:
    /// Sets sigma(e,f) = p and sigma(f,e) = p^-1, replacing any previous value.
    void set(EdgeId e, EdgeId f, const Permutation& p);

    /// sigma(e,f)(c).
    Colour map(EdgeId e, EdgeId f, Colour c) const;

    /// (e,c) blocks (f,c2) iff sigma(e,f)(c) == c2. Callers supply adjacent e != f.
    bool blocks(EdgeId e, Colour c, EdgeId f, Colour c2) const { return map(e, f, c) == c2; }

    bool is_identity() const noexcept { return pairs_.empty(); }

    /// Stored permutations keyed by (lo, hi) with lo < hi; each value is sigma(lo,hi).
    const std::map<std::pair<EdgeId, EdgeId>, Permutation>& stored() const noexcept { return pairs_; }

private:
    std::map<std::pair<EdgeId, EdgeId>, Permutation> pairs_;
};

} // namespace nibble
