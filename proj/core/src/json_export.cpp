#include "an/json_export.hpp"

namespace an {

using nlohmann::ordered_json;

ordered_json certificate_json(const CutCertificate& cert, std::optional<int> dimension,
                              const AnNetwork* labels) {
    ordered_json doc;
    doc["n"] = dimension ? ordered_json(*dimension) : ordered_json(nullptr);
    doc["ell"] = cert.ell;
    doc["faulty"] = cert.faulty.to_vector();
    if (labels) {
        std::vector<std::string> names;
        cert.faulty.for_each([&](VertexId v) { names.push_back(labels->label_string(v)); });
        doc["faulty_labels"] = names;
    }
    ordered_json comps = ordered_json::array();
    for (std::size_t i = 0; i < cert.components.size(); ++i) {
        ordered_json c;
        c["size"] = cert.components[i].count();
        c["vertices"] = cert.components[i].to_vector();
        c["shape"] = shape_name(cert.shapes[i]);
        comps.push_back(std::move(c));
    }
    doc["components"] = std::move(comps);
    doc["satisfied"] = cert.satisfied;
    doc["method"] = cert.method;
    doc["elapsed_ms"] = cert.elapsed_ms;
    return doc;
}

ordered_json lemma_report_json(const LemmaReport& report) {
    ordered_json doc;
    doc["lemma"] = report.lemma_id;
    doc["n"] = report.n;
    doc["checked"] = report.instances_checked;
    ordered_json violations = ordered_json::array();
    for (const auto& v : report.violations) {
        ordered_json item;
        item["what"] = v.what;
        item["instance"] = v.instance;
        item["observed"] = v.observed;
        item["expected"] = v.expected;
        violations.push_back(std::move(item));
    }
    doc["violations"] = std::move(violations);
    doc["passed"] = report.passed;
    return doc;
}

ordered_json kappa_result_json(const KappaResult& result, std::optional<int> dimension,
                               const AnNetwork* labels) {
    ordered_json doc;
    doc["value"] = result.value;
    doc["method"] = kappa_method_name(result.method);
    doc["nodes_explored"] = result.nodes_explored;
    doc["elapsed_ms"] = result.elapsed.count();
    doc["witness"] = certificate_json(result.witness, dimension, labels);
    return doc;
}

ordered_json graph_json(const TopologyGraph& g, std::optional<int> dimension,
                        const AnNetwork* labels) {
    ordered_json doc;
    doc["n"] = dimension ? ordered_json(*dimension) : ordered_json(nullptr);
    doc["vertex_count"] = g.vertex_count();
    if (labels) {
        std::vector<std::string> names;
        names.reserve(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) names.push_back(labels->label_string(v));
        doc["labels"] = names;
    }
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back(ordered_json::array({u, v}));
    doc["edges"] = std::move(edges);
    return doc;
}

}  // namespace an
