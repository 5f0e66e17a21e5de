#include "doctest.h"

#include <algorithm>

#include "an/an_network.hpp"
#include "an/graph_algorithms.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

using namespace an;

namespace {

TopologyGraph path_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    return TopologyGraph::from_edges(static_cast<std::size_t>(n), edges);
}

TopologyGraph cycle_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
    return TopologyGraph::from_edges(static_cast<std::size_t>(n), edges);
}

TopologyGraph complete_graph(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return TopologyGraph::from_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace

TEST_CASE("graph construction validates input") {
    std::vector<std::pair<VertexId, VertexId>> loop{{0, 0}};
    CHECK_THROWS_AS(TopologyGraph::from_edges(2, loop), std::invalid_argument);
    std::vector<std::pair<VertexId, VertexId>> dup{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(TopologyGraph::from_edges(2, dup), std::invalid_argument);
    std::vector<std::pair<VertexId, VertexId>> range{{0, 5}};
    CHECK_THROWS_AS(TopologyGraph::from_edges(2, range), std::invalid_argument);
}

TEST_CASE("bit rows agree with adjacency lists") {
    const TopologyGraph g = testutil::random_connected_graph(7, 8, 14);
    REQUIRE(g.has_bit_rows());
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const auto nb = g.neighbors(u);
            const bool in_list = std::find(nb.begin(), nb.end(), v) != nb.end();
            CHECK(g.adjacent(u, v) == in_list);
        }
}

TEST_CASE("components after removal: path example") {
    const TopologyGraph g = path_graph(4);
    const auto comps = components_after_removal(g, VertexSet::of(4, {1}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet::of(4, {0}));
    CHECK(comps[1] == VertexSet::of(4, {2, 3}));
}

TEST_CASE("components after removal: empty faulty set on connected graph") {
    const TopologyGraph g = cycle_graph(6);
    const auto comps = components_after_removal(g, VertexSet(6));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].count() == 6);
}

TEST_CASE("removing a vertex neighborhood in dimension 5 isolates it") {
    const AnNetwork net = build_an(5);
    for (VertexId v : {VertexId{0}, VertexId{17}, VertexId{59}}) {
        const auto comps = components_after_removal(net.graph(), net.graph().neighbor_set(v));
        REQUIRE(comps.size() == 2);
        CHECK(comps[0] == VertexSet::of(60, {v}));
        CHECK(comps[1].count() == 55);
    }
}

TEST_CASE("components match the oracle on random graphs") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const TopologyGraph g = testutil::random_connected_graph(seed);
        std::mt19937_64 rng(seed * 77);
        VertexSet f(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (rng() % 3 == 0) f.set(v);
        const auto comps = components_after_removal(g, f);
        std::vector<bool> removed(g.vertex_count(), false);
        f.for_each([&](VertexId v) { removed[v] = true; });
        auto expected = oracle::components(g, removed);
        CHECK(comps.size() == expected.size());
        std::size_t covered = 0;
        for (const auto& c : comps) {
            covered += c.count();
            CHECK(is_connected_subset(g, c));
            // no edges leave the component into other surviving vertices
            const VertexSet nb = open_neighborhood(g, c);
            CHECK((nb - f).empty());
        }
        CHECK(covered == g.vertex_count() - f.count());
        // ascending sizes
        for (std::size_t i = 0; i + 1 < comps.size(); ++i)
            CHECK(comps[i].count() <= comps[i + 1].count());
    }
}

TEST_CASE("open neighborhood basics") {
    const AnNetwork net = build_an(4);
    const auto& g = net.graph();
    CHECK(open_neighborhood(g, VertexSet(12)).empty());
    CHECK(open_neighborhood(g, VertexSet::full(12)).empty());
    CHECK(open_neighborhood(g, VertexSet::of(12, {0})) == g.neighbor_set(0));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const TopologyGraph rg = testutil::random_connected_graph(seed);
        std::mt19937_64 rng(seed);
        VertexSet s(rg.vertex_count());
        for (VertexId v = 0; v < rg.vertex_count(); ++v)
            if (rng() % 2) s.set(v);
        const VertexSet nb = open_neighborhood(rg, s);
        CHECK(!nb.intersects(s));
        const auto expected = oracle::neighborhood_of(rg, s.to_vector());
        CHECK(nb.to_vector() == expected);
    }
}

TEST_CASE("is_connected_subset") {
    const AnNetwork net = build_an(4);
    const auto& g = net.graph();
    CHECK(is_connected_subset(g, VertexSet(12)));
    CHECK(is_connected_subset(g, VertexSet::of(12, {5})));

    // find a triangle by scanning edges for a common neighbor
    bool checked_triangle = false;
    for (auto [u, v] : g.edges()) {
        for (VertexId w : g.neighbors(u)) {
            if (w != v && g.adjacent(w, v)) {
                CHECK(is_connected_subset(g, VertexSet::of(12, {u, v, w})));
                checked_triangle = true;
                break;
            }
        }
        if (checked_triangle) break;
    }
    CHECK(checked_triangle);

    // two non-adjacent vertices
    bool checked_pair = false;
    for (VertexId u = 0; u < 12 && !checked_pair; ++u)
        for (VertexId v = u + 1; v < 12 && !checked_pair; ++v)
            if (!g.adjacent(u, v)) {
                CHECK(!is_connected_subset(g, VertexSet::of(12, {u, v})));
                checked_pair = true;
            }
    CHECK(checked_pair);
}

TEST_CASE("cycle detection on fixed graphs") {
    const AnNetwork net = build_an(4);
    CHECK(has_cycle_of_length(net.graph(), 3));
    CHECK(!has_cycle_of_length(net.graph(), 4));
    CHECK(!has_cycle_of_length(net.graph(), 5));
    CHECK(has_cycle_of_length(cycle_graph(4), 4));
    CHECK(!has_cycle_of_length(cycle_graph(4), 3));
    CHECK_THROWS_AS(has_cycle_of_length(cycle_graph(4), 2), std::invalid_argument);
}

TEST_CASE("cycle detection agrees with the oracle") {
    for (std::uint64_t seed = 30; seed < 50; ++seed) {
        const TopologyGraph g = testutil::random_connected_graph(seed, 5, 12);
        for (int k = 3; k <= std::min<int>(6, static_cast<int>(g.vertex_count())); ++k)
            CHECK(has_cycle_of_length(g, k) == oracle::cycle_exists(g, k));
    }
}

TEST_CASE("induced six-cycle search") {
    const TopologyGraph c6 = cycle_graph(6);
    const auto t = find_induced_six_cycle(c6);
    REQUIRE(t.has_value());
    CHECK(*t == std::array<VertexId, 6>{0, 1, 2, 3, 4, 5});
    CHECK(oracle::is_induced_six_cycle(c6, *t));

    CHECK(!find_induced_six_cycle(complete_graph(4)).has_value());
    CHECK(!find_induced_six_cycle(complete_graph(7)).has_value());

    const AnNetwork net = build_an(4);
    const auto an4 = find_induced_six_cycle(net.graph());
    REQUIRE(an4.has_value());
    CHECK(oracle::is_induced_six_cycle(net.graph(), *an4));
    const auto brute = oracle::lex_min_induced_six_cycle(net.graph());
    REQUIRE(brute.has_value());
    CHECK(*an4 == *brute);
}

TEST_CASE("diameters") {
    CHECK(all_pairs_diameter(build_an(4).graph()) == 3);
    CHECK(all_pairs_diameter(build_an(5).graph()) == 5);
    CHECK(all_pairs_diameter(complete_graph(5)) == 1);
    std::vector<std::pair<VertexId, VertexId>> disc{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(all_pairs_diameter(TopologyGraph::from_edges(4, disc)),
                    std::invalid_argument);
    for (std::uint64_t seed = 60; seed < 70; ++seed) {
        const TopologyGraph g = testutil::random_connected_graph(seed, 4, 10);
        CHECK(all_pairs_diameter(g) == oracle::diameter(g));
    }
}

TEST_CASE("induced subgraph preserves adjacency") {
    const AnNetwork net = build_an(4);
    VertexSet s = VertexSet::of(12, {0, 2, 3, 7, 11});
    const InducedSubgraph sub = induced_subgraph(net.graph(), s);
    CHECK(sub.graph.vertex_count() == 5);
    for (VertexId a = 0; a < 5; ++a)
        for (VertexId b = 0; b < 5; ++b)
            if (a != b)
                CHECK(sub.graph.adjacent(a, b) ==
                      net.graph().adjacent(sub.to_parent[a], sub.to_parent[b]));
}

TEST_CASE("vertex set sorted-sequence order matches vector comparison") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        VertexSet a(70), b(70);
        for (int i = 0; i < 70; ++i) {
            if (rng() % 3 == 0) a.set(static_cast<VertexId>(i));
            if (rng() % 3 == 0) b.set(static_cast<VertexId>(i));
        }
        CHECK(VertexSet::lex_less(a, b) == (a.to_vector() < b.to_vector()));
    }
}

TEST_CASE("component scanner matches full decomposition") {
    for (std::uint64_t seed = 80; seed < 95; ++seed) {
        const TopologyGraph g = testutil::random_connected_graph(seed);
        ComponentScanner scanner(g);
        std::mt19937_64 rng(seed);
        for (int trial = 0; trial < 30; ++trial) {
            VertexSet f(g.vertex_count());
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (rng() % 4 == 0) f.set(v);
            const int expected = oracle::component_count(g, f);
            CHECK(scanner.count_components(f, 1 << 20) == expected);
            CHECK(scanner.connected_after_removal(f) == (expected <= 1));
        }
    }
}
