#include "doctest.h"

#include <sstream>

#include "an/an_network.hpp"
#include "an/connectivity.hpp"
#include "an/dot_export.hpp"
#include "an/edge_list.hpp"
#include "an/json_export.hpp"

using namespace an;

TEST_CASE("edge list round trip preserves the graph") {
    const AnNetwork net = build_an(4);
    std::stringstream buf;
    write_edge_list(buf, net.graph());
    const TopologyGraph loaded = load_edge_list(buf);
    CHECK(loaded.vertex_count() == net.graph().vertex_count());
    CHECK(loaded.edges() == net.graph().edges());
}

TEST_CASE("edge list loader rejects malformed input") {
    auto load = [](const std::string& text) {
        std::stringstream in(text);
        return load_edge_list(in);
    };
    CHECK_THROWS_AS(load(""), std::invalid_argument);
    CHECK_THROWS_AS(load("0 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(load("0 1\n1 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(load("0 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(load("a b\n"), std::invalid_argument);
    CHECK_THROWS_AS(load("0 -1\n"), std::invalid_argument);
}

TEST_CASE("dot export of the 3-dimensional network") {
    const AnNetwork net = build_an(3);
    std::vector<std::string> labels;
    for (VertexId v = 0; v < 3; ++v) labels.push_back(net.label_string(v));
    const std::string dot = export_dot(net.graph(), &labels, "an3");
    const std::string expected =
        "graph an3 {\n"
        "  0 [label=\"123\"];\n"
        "  1 [label=\"231\"];\n"
        "  2 [label=\"312\"];\n"
        "  0 -- 1;\n"
        "  0 -- 2;\n"
        "  1 -- 2;\n"
        "}\n";
    CHECK(dot == expected);
    CHECK(export_dot(net.graph(), &labels, "an3") == dot);  // deterministic
}

TEST_CASE("certificate json carries the fixed field order and labels") {
    const AnNetwork net = build_an(4);
    const auto result = kappa_ell_exhaustive(net.graph(), 4, 7);
    REQUIRE(result.has_value());
    const auto doc = certificate_json(result->witness, 4, &net);

    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"n", "ell", "faulty", "faulty_labels", "components",
                                           "satisfied", "method", "elapsed_ms"});
    CHECK(doc["n"] == 4);
    CHECK(doc["ell"] == 4);
    CHECK(doc["satisfied"] == true);
    CHECK(doc["method"] == "exhaustive");
    CHECK(doc["faulty"].size() == 6);
    CHECK(doc["faulty_labels"].size() == 6);
    // faulty ids ascending
    for (std::size_t i = 0; i + 1 < doc["faulty"].size(); ++i)
        CHECK(doc["faulty"][i] < doc["faulty"][i + 1]);
    // components ascending by size with sorted vertex lists
    for (std::size_t i = 0; i + 1 < doc["components"].size(); ++i)
        CHECK(doc["components"][i]["size"] <= doc["components"][i + 1]["size"]);

    const auto unlabeled = certificate_json(result->witness);
    CHECK(unlabeled["n"].is_null());
    CHECK(!unlabeled.contains("faulty_labels"));
}

TEST_CASE("lemma report json has the documented shape") {
    LemmaReport rep;
    rep.lemma_id = "an-basic-structure";
    rep.n = 4;
    rep.instances_checked = 17;
    rep.passed = true;
    const auto doc = lemma_report_json(rep);
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"lemma", "n", "checked", "violations", "passed"});
    CHECK(doc["checked"] == 17);
    CHECK(doc["violations"].empty());
}

TEST_CASE("graph json") {
    const AnNetwork net = build_an(3);
    const auto doc = graph_json(net.graph(), 3, &net);
    CHECK(doc["vertex_count"] == 3);
    CHECK(doc["labels"] == std::vector<std::string>{"123", "231", "312"});
    CHECK(doc["edges"].size() == 3);
}
