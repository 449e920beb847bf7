#include "nibble/correspondence.hpp"

#include "nibble/errors.hpp"

#include <fmt/format.h>
#include <set>

namespace nibble {

Permutation Permutation::from_partial(const std::vector<std::pair<Colour, Colour>>& pairs)
{
    std::map<Colour, Colour> fwd;
    std::set<Colour> image;
    for (auto [from, to] : pairs) {
        if (!fwd.emplace(from, to).second)
            throw Error(ErrorCode::Precondition, fmt::format("colour {} is mapped twice", from));
        if (!image.insert(to).second)
            throw Error(ErrorCode::Precondition, fmt::format("colour {} is the image of two colours", to));
    }

    // Close every open chain start -> ... -> end by mapping end back to start.
    std::map<Colour, Colour> closed = fwd;
    for (auto [start, unused] : fwd) {
        (void)unused;
        if (image.contains(start))
            continue;
        Colour end = start;
        while (fwd.contains(end))
            end = fwd.at(end);
        closed.emplace(end, start);
    }

    Permutation p;
    for (auto [from, to] : closed) {
        if (from == to)
            continue;
        p.forward_.emplace(from, to);
        p.backward_.emplace(to, from);
    }
    return p;
}

Colour Permutation::apply(Colour c) const
{
    auto it = forward_.find(c);
    return it == forward_.end() ? c : it->second;
}

Colour Permutation::apply_inverse(Colour c) const
{
    auto it = backward_.find(c);
    return it == backward_.end() ? c : it->second;
}

Permutation Permutation::inverse() const
{
    Permutation p;
    p.forward_ = backward_;
    p.backward_ = forward_;
    return p;
}

void Correspondence::set(EdgeId e, EdgeId f, const Permutation& p)
{
    if (e == f)
        throw Error(ErrorCode::Precondition, fmt::format("correspondence needs two distinct edges, got {} twice", e));
    auto key = e < f ? std::pair{e, f} : std::pair{f, e};
    Permutation stored = e < f ? p : p.inverse();
    if (stored.is_identity())
        pairs_.erase(key);
    else
        pairs_[key] = std::move(stored);
}

Colour Correspondence::map(EdgeId e, EdgeId f, Colour c) const
{
    if (pairs_.empty())
        return c;
    if (e < f) {
        auto it = pairs_.find({e, f});
        return it == pairs_.end() ? c : it->second.apply(c);
    }
    auto it = pairs_.find({f, e});
    return it == pairs_.end() ? c : it->second.apply_inverse(c);
}

} // namespace nibble
