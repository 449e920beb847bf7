#include "nibble/brute_force.hpp"

#include <optional>
#include <vector>

namespace nibble {

const char* to_string(BruteStatus status)
{
    switch (status) {
    case BruteStatus::Found: return "found";
    case BruteStatus::Unsatisfiable: return "unsatisfiable";
    case BruteStatus::CapExceeded: return "cap-exceeded";
    }
    return "unknown";
}

namespace {

class Search {
public:
    Search(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma, std::uint64_t cap)
        : g_(g), sigma_(sigma), cap_(cap), colour_(g.edge_count())
    {
        domain_.resize(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            for (const auto& entry : lists.list(e))
                domain_[e].push_back({entry.colour, 0});
    }

    // true: found; false: exhausted this branch. Sets capped_ on overflow.
    bool run()
    {
        std::optional<EdgeId> pick;
        std::size_t best = 0;
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (colour_[e])
                continue;
            std::size_t live = 0;
            for (const auto& option : domain_[e])
                live += option.removed == 0;
            if (!pick || live < best) {
                pick = e;
                best = live;
            }
        }
        if (!pick)
            return true;

        const EdgeId e = *pick;
        for (std::size_t i = 0; i < domain_[e].size(); ++i) {
            if (domain_[e][i].removed)
                continue;
            if (++nodes_ > cap_) {
                capped_ = true;
                return false;
            }
            const Colour c = domain_[e][i].colour;
            colour_[e] = c;
            std::vector<std::pair<EdgeId, std::size_t>> pruned;
            bool wiped = false;
            for (EdgeId f : g_.neighbours(e)) {
                if (colour_[f])
                    continue;
                std::size_t live = 0;
                for (std::size_t j = 0; j < domain_[f].size(); ++j) {
                    auto& option = domain_[f][j];
                    if (!option.removed && sigma_.map(e, f, c) == option.colour) {
                        option.removed = 1;
                        pruned.emplace_back(f, j);
                    }
                    live += option.removed == 0;
                }
                wiped = wiped || live == 0;
            }
            if (!wiped && run())
                return true;
            for (auto [f, j] : pruned)
                domain_[f][j].removed = 0;
            colour_[e].reset();
            if (capped_)
                return false;
        }
        return false;
    }

    PartialColouring colouring() const
    {
        PartialColouring out(g_.edge_count());
        for (EdgeId e = 0; e < g_.edge_count(); ++e)
            if (colour_[e])
                out.set(e, *colour_[e]);
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }
    bool capped() const { return capped_; }

private:
    struct Option {
        Colour colour;
        std::uint8_t removed;
    };

    const Hypergraph& g_;
    const Correspondence& sigma_;
    std::uint64_t cap_;
    std::uint64_t nodes_ = 0;
    bool capped_ = false;
    std::vector<std::optional<Colour>> colour_;
    std::vector<std::vector<Option>> domain_;
};

} // namespace

BruteResult brute_force_colour(const Hypergraph& g, const WeightedLists& lists, const Correspondence& sigma,
                               std::uint64_t node_cap)
{
    Search search(g, lists, sigma, node_cap);
    BruteResult out;
    const bool found = search.run();
    out.nodes = search.nodes();
    if (found) {
        out.status = BruteStatus::Found;
        out.colouring = search.colouring();
    } else {
        out.status = search.capped() ? BruteStatus::CapExceeded : BruteStatus::Unsatisfiable;
        out.colouring = PartialColouring(g.edge_count());
    }
    return out;
}

} // namespace nibble
