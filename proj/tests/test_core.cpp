#include "support.hpp"

#include "nibble/colouring.hpp"
#include "nibble/errors.hpp"
#include "nibble/instance.hpp"
#include "nibble/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace nibble;
using support::make_lists;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& ex) {
        return ex.code();
    }
    FAIL("expected an error");
    return ErrorCode::Precondition;
}

// Random graph on 7 vertices with random lists and a random correspondence on
// roughly half of the adjacent pairs.
struct RandomCase {
    Hypergraph g;
    WeightedLists lists;
    Correspondence sigma;
};

RandomCase random_case(std::uint64_t seed)
{
    SplitMix64 rng(seed);
    std::vector<std::vector<VertexId>> es;
    for (VertexId a = 0; a < 7; ++a)
        for (VertexId b = a + 1; b < 7; ++b)
            if (rng.uniform() < 0.4)
                es.push_back({a, b});
    Hypergraph g(2, 7, es);
    WeightedLists lists(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::vector<ListEntry> entries;
        for (Colour c = 0; c < 6; ++c)
            if (rng.uniform() < 0.6)
                entries.push_back({c, 0.1 + 0.9 * rng.uniform()});
        lists.set_list(e, entries);
    }
    Correspondence sigma;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (EdgeId f : g.neighbours(e))
            if (e < f && rng.uniform() < 0.5) {
                std::vector<Colour> image{0, 1, 2, 3, 4, 5};
                rng.shuffle(image.begin(), image.end());
                std::vector<std::pair<Colour, Colour>> map;
                for (Colour c = 0; c < 6; ++c)
                    map.push_back({c, image[c]});
                sigma.set(e, f, Permutation::from_partial(map));
            }
    return {std::move(g), std::move(lists), std::move(sigma)};
}

} // namespace

TEST_CASE("weighted size sums the weights of the pairs")
{
    const auto lists = make_lists({{1, 2}, {1}});
    WeightedLists w(2);
    w.set_list(0, {{1, 0.5}, {2, 0.3}});
    std::vector<ListEntry> tenths;
    for (Colour c = 0; c < 10; ++c)
        tenths.push_back({c, 0.1});
    w.set_list(1, tenths);

    CHECK(weighted_size({}, lists) == 0.0);
    const std::vector<EdgeColour> two{{0, 1}, {0, 2}};
    CHECK(weighted_size(two, w) == doctest::Approx(0.8).epsilon(1e-15));
    std::vector<EdgeColour> ten;
    for (Colour c = 0; c < 10; ++c)
        ten.push_back({1, c});
    CHECK(weighted_size(ten, w) == doctest::Approx(1.0).epsilon(1e-15));

    const std::vector<EdgeColour> missing{{1, 42}};
    CHECK(code_of([&] { weighted_size(missing, w); }) == ErrorCode::MissingWeight);
}

TEST_CASE("colour neighbours on small graphs")
{
    SUBCASE("isolated edge")
    {
        Hypergraph g(2, 2, {{0, 1}});
        const auto lists = make_lists({{0, 1, 2}});
        CHECK(colour_neighbours(g, lists, {}, 0, 0, 1).empty());
    }
    SUBCASE("path with identity correspondence")
    {
        const auto g = support::path_graph(2);
        const auto lists = make_lists({{1, 2}, {1, 3}});
        const auto n = colour_neighbours(g, lists, {}, 0, 1, 1);
        REQUIRE(n.size() == 1);
        CHECK(n[0] == EdgeColour{1, 1});
        CHECK(colour_neighbours(g, lists, {}, 0, 1, 2).empty());
        CHECK(colour_neighbours(g, lists, {}, 0, 0, 1).empty());
    }
    SUBCASE("star: the other two leaves at the centre")
    {
        const auto g = support::star_graph(3);
        const auto lists = make_lists({{5}, {5}, {5}});
        const auto n = colour_neighbours(g, lists, {}, 0, 0, 5);
        CHECK(n == std::vector<EdgeColour>{{1, 5}, {2, 5}});
    }
    SUBCASE("correspondence decides which colour blocks")
    {
        const auto g = support::path_graph(2);
        const auto lists = make_lists({{7}, {1, 7}});
        Correspondence sigma;
        sigma.set(1, 0, Permutation::from_partial({{1, 7}}));
        CHECK(colour_neighbours(g, lists, sigma, 0, 1, 7) == std::vector<EdgeColour>{{1, 1}});
    }
    SUBCASE("preconditions")
    {
        const auto g = support::path_graph(2);
        const auto lists = make_lists({{1}, {1}});
        CHECK(code_of([&] { colour_neighbours(g, lists, {}, 0, 2, 1); }) == ErrorCode::Precondition);
        CHECK(code_of([&] { colour_neighbours(g, lists, {}, 0, 1, 9); }) == ErrorCode::Precondition);
    }
}

TEST_CASE("colour neighbourhoods are disjoint and agree with the correspondence")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto [g, lists, sigma] = random_case(seed);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            for (VertexId v : g.edge(e)) {
                std::set<EdgeColour> seen;
                for (const auto& entry : lists.list(e)) {
                    const auto n = colour_neighbours(g, lists, sigma, e, v, entry.colour);
                    double w = 0.0;
                    for (auto [f, c2] : n) {
                        CHECK(f != e);
                        CHECK(g.contains(f, v));
                        CHECK(lists.contains(f, c2));
                        CHECK(sigma.map(f, e, c2) == entry.colour);
                        CHECK(seen.insert({f, c2}).second);
                        w += *lists.weight(f, c2);
                    }
                    CHECK(colour_neighbour_weight(g, lists, sigma, e, v, entry.colour) ==
                          doctest::Approx(w).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("validate colouring")
{
    const auto g = support::path_graph(2);
    const auto lists = make_lists({{1, 2}, {1, 2}});

    PartialColouring empty(2);
    CHECK(validate_colouring(g, lists, {}, empty).empty());

    PartialColouring ok(2);
    ok.set(0, 1);
    ok.set(1, 2);
    CHECK(validate_colouring(g, lists, {}, ok).empty());

    PartialColouring clash(2);
    clash.set(0, 1);
    clash.set(1, 1);
    const auto v = validate_colouring(g, lists, {}, clash);
    REQUIRE(!v.empty());
    CHECK(v.front().kind == Violation::Kind::Blocking);

    PartialColouring outside(2);
    outside.set(0, 3);
    const auto w = validate_colouring(g, lists, {}, outside);
    REQUIRE(w.size() == 1);
    CHECK(w.front().kind == Violation::Kind::NotInList);
    CHECK(w.front().edge == 0);
}

TEST_CASE("sub-colourings of valid colourings are valid")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto [g, lists, sigma] = random_case(seed);
        // Greedy colouring in edge order, skipping edges that cannot be coloured.
        PartialColouring gamma(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            for (const auto& entry : lists.list(e)) {
                gamma.set(e, entry.colour);
                if (validate_colouring(g, lists, sigma, gamma).empty())
                    break;
                gamma.clear(e);
            }
        REQUIRE(validate_colouring(g, lists, sigma, gamma).empty());
        SplitMix64 rng(seed);
        auto sub = gamma;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (rng.uniform() < 0.5)
                sub.clear(e);
        CHECK(validate_colouring(g, lists, sigma, sub).empty());
    }
}

TEST_CASE("restrict lists")
{
    const auto g = support::path_graph(2);
    const auto lists = make_lists({{1, 2, 7}, {1, 2}});

    SUBCASE("nothing coloured")
    {
        CHECK(restrict_lists(g, lists, {}, PartialColouring(2)) == lists);
    }
    SUBCASE("identity drops the neighbour's colour")
    {
        PartialColouring gamma(2);
        gamma.set(1, 1);
        const auto r = restrict_lists(g, lists, {}, gamma);
        CHECK(r.list(0).size() == 2);
        CHECK(!r.contains(0, 1));
        CHECK(r.list(1).size() == 2);
    }
    SUBCASE("correspondence maps the blocked colour")
    {
        Correspondence sigma;
        sigma.set(1, 0, Permutation::from_partial({{1, 7}}));
        PartialColouring gamma(2);
        gamma.set(1, 1);
        const auto r = restrict_lists(g, lists, sigma, gamma);
        CHECK(!r.contains(0, 7));
        CHECK(r.contains(0, 1));
        CHECK(r.contains(0, 2));
    }
    SUBCASE("invalid colouring is rejected")
    {
        PartialColouring gamma(2);
        gamma.set(0, 1);
        gamma.set(1, 1);
        CHECK(code_of([&] { restrict_lists(g, lists, {}, gamma); }) == ErrorCode::Validation);
    }
}

TEST_CASE("restrict lists is idempotent and keeps weights")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto [g, lists, sigma] = random_case(seed);
        PartialColouring gamma(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); e += 2)
            for (const auto& entry : lists.list(e)) {
                gamma.set(e, entry.colour);
                if (validate_colouring(g, lists, sigma, gamma).empty())
                    break;
                gamma.clear(e);
            }
        const auto once = restrict_lists(g, lists, sigma, gamma);
        CHECK(restrict_lists(g, once, sigma, gamma) == once);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            for (const auto& entry : once.list(e))
                CHECK(lists.weight(e, entry.colour) == entry.weight);
    }
}

TEST_CASE("permutations")
{
    const auto p = Permutation::from_partial({{1, 7}});
    CHECK(p.apply(1) == 7);
    CHECK(p.apply(7) == 1);
    CHECK(p.apply(3) == 3);
    CHECK(p.inverse() == p);

    const auto cycle = Permutation::from_partial({{1, 2}, {2, 3}});
    CHECK(cycle.apply(3) == 1);
    for (Colour c = 0; c < 6; ++c)
        CHECK(cycle.apply_inverse(cycle.apply(c)) == c);

    CHECK(code_of([] { Permutation::from_partial({{1, 2}, {3, 2}}); }) == ErrorCode::Precondition);

    Correspondence sigma;
    sigma.set(0, 1, cycle);
    for (Colour c = 0; c < 6; ++c)
        CHECK(sigma.map(1, 0, sigma.map(0, 1, c)) == c);
}

TEST_CASE("validate instance")
{
    SUBCASE("triangle is fine")
    {
        auto inst = make_instance(support::triangle(), 0, 3, make_lists({{0, 1}, {0, 1}, {0, 1}}));
        CHECK(validate_instance(inst).empty());
    }
    SUBCASE("two triples sharing two vertices")
    {
        Hypergraph g(3, 4, {{0, 1, 2}, {0, 1, 3}});
        auto inst = make_instance(g, 0, 3, make_lists({{0}, {1}}));
        const auto issues = validate_instance(inst);
        REQUIRE(!issues.empty());
        CHECK(issues.front().kind == InstanceIssue::Kind::Linearity);
    }
    SUBCASE("weight above one")
    {
        auto inst = make_instance(support::path_graph(1), 0, 3, make_lists({{0}}, 1.5));
        const auto issues = validate_instance(inst);
        REQUIRE(!issues.empty());
        CHECK(issues.front().kind == InstanceIssue::Kind::WeightRange);
    }
    SUBCASE("inconsistent correspondence records")
    {
        std::vector<SigmaEntry> entries{{0, 1, {{1, 2}, {2, 1}}}, {1, 0, {{1, 3}, {3, 1}}}};
        auto inst = make_instance(support::path_graph(2), 0, 3, make_lists({{1, 2}, {1, 2}}), entries);
        const auto issues = validate_instance(inst);
        REQUIRE(!issues.empty());
        CHECK(std::any_of(issues.begin(), issues.end(),
                          [](const auto& i) { return i.kind == InstanceIssue::Kind::Correspondence; }));
    }
    SUBCASE("wrong uniformity")
    {
        Hypergraph g(3, 4, {{0, 1}});
        auto inst = make_instance(g, 0, 3, make_lists({{0}}));
        const auto issues = validate_instance(inst);
        REQUIRE(!issues.empty());
        CHECK(issues.front().kind == InstanceIssue::Kind::Uniformity);
    }
}

TEST_CASE("instance JSON round trip")
{
    std::vector<SigmaEntry> entries{{0, 1, {{1, 2}, {2, 1}}}};
    WeightedLists lists(3);
    lists.set_list(0, {{0, 0.5}, {1, 0.25}, {2, 1.0}});
    lists.set_list(1, {{1, 1.0}, {2, 0.125}});
    lists.set_list(2, {{0, 0.3}});
    const auto inst = make_instance(support::triangle(), 0, 5, lists, entries);
    const auto back = instance_from_json(instance_to_json(inst));
    CHECK(back.graph.edges() == inst.graph.edges());
    CHECK(back.graph.k() == 2);
    CHECK(back.universe_lo == 0);
    CHECK(back.universe_hi == 5);
    CHECK(back.lists == inst.lists);
    CHECK(back.sigma.stored() == inst.sigma.stored());
    CHECK(instance_to_json(back) == instance_to_json(inst));

    CHECK(code_of([] { instance_from_json(nlohmann::json::parse(R"({"k": 2})")); }) == ErrorCode::Parse);
}
