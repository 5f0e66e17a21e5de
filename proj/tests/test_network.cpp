#include "doctest.h"

#include <set>

#include "an/an_network.hpp"
#include "an/graph_algorithms.hpp"

using namespace an;

namespace {

void check_counts(const AnNetwork& net) {
    const std::uint64_t n = static_cast<std::uint64_t>(net.n());
    std::uint64_t fact = 1;
    for (std::uint64_t i = 2; i <= n; ++i) fact *= i;
    CHECK(net.graph().vertex_count() == fact / 2);
    CHECK(net.graph().edge_count() == fact * (n - 1) / 4);
    for (VertexId v = 0; v < net.graph().vertex_count(); ++v)
        CHECK(net.graph().degree(v) == static_cast<int>(n) - 1);
}

}  // namespace

TEST_CASE("network sizes and regularity for n = 3..6") {
    for (int n = 3; n <= 6; ++n) check_counts(build_an(n));
}

TEST_CASE("dimension 3 is a triangle") {
    const AnNetwork net = build_an(3);
    CHECK(net.graph().vertex_count() == 3);
    CHECK(net.graph().edge_count() == 3);
    CHECK(net.label_string(0) == "123");
    CHECK(net.label_string(1) == "231");
    CHECK(net.label_string(2) == "312");
}

TEST_CASE("dimension bounds are enforced") {
    CHECK_THROWS_AS(build_an(2), std::invalid_argument);
    CHECK_THROWS_AS(build_an(11), std::invalid_argument);
    AnBuildOptions opts;
    opts.dimension_cap = 4;
    CHECK_THROWS_AS(build_an(5, opts), std::invalid_argument);
}

TEST_CASE("labels are the lexicographic even permutations") {
    const AnNetwork net = build_an(4);
    CHECK(net.label(0) == Permutation({1, 2, 3, 4}));
    for (VertexId v = 0; v + 1 < net.graph().vertex_count(); ++v)
        CHECK(net.label(v) < net.label(v + 1));
    for (VertexId v = 0; v < net.graph().vertex_count(); ++v)
        CHECK(net.vertex_of(net.label(v)) == v);
}

TEST_CASE("partition classes: sizes, disjoint cover, external edges") {
    const AnNetwork net = build_an(5);
    const SubnetPartition part = subnet_partition(net);
    REQUIRE(part.classes.size() == 5);
    VertexSet all(net.graph().vertex_count());
    for (const auto& cls : part.classes) {
        CHECK(cls.count() == 12);
        CHECK(!cls.intersects(all));
        all |= cls;
    }
    CHECK(all.count() == 60);
    int pairs = 0;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            CHECK(part.cross[part.pair_index(i, j)].size() == 3);
            ++pairs;
        }
    CHECK(pairs == 10);
}

TEST_CASE("each class induces a copy of the lower-dimensional network") {
    for (int n : {4, 5, 6}) {
        const AnNetwork net = build_an(n);
        for (int c = 1; c <= n; ++c) CHECK(class_matches_lower_dimension(net, c));
    }
}

TEST_CASE("out-neighbor map: involution, injectivity, degree split") {
    const AnNetwork net = build_an(4);
    const SubnetPartition part = subnet_partition(net);
    for (VertexId v = 0; v < net.graph().vertex_count(); ++v) {
        const VertexId o = out_neighbor(net, v);
        CHECK(net.last_symbol(o) != net.last_symbol(v));
        CHECK(out_neighbor(net, o) == v);
        // exactly one out-neighbor: all other neighbors stay in the class
        int external = 0;
        for (VertexId u : net.graph().neighbors(v))
            if (net.last_symbol(u) != net.last_symbol(v)) ++external;
        CHECK(external == 1);
    }
    for (int c = 1; c <= 4; ++c) {
        std::set<VertexId> outs;
        part.classes[static_cast<std::size_t>(c - 1)].for_each(
            [&](VertexId v) { outs.insert(out_neighbor(net, v)); });
        CHECK(outs.size() == part.classes[static_cast<std::size_t>(c - 1)].count());
    }
}

TEST_CASE("out_neighbor rejects n=3 and bad ids") {
    const AnNetwork net3 = build_an(3);
    CHECK_THROWS_AS(out_neighbor(net3, 0), std::invalid_argument);
    const AnNetwork net4 = build_an(4);
    CHECK_THROWS_AS(out_neighbor(net4, 12), std::out_of_range);
}
