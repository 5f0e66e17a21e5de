#pragma once

#include <optional>

#include "json.hpp"

#include "an/an_network.hpp"
#include "an/connectivity.hpp"
#include "an/cut_certificate.hpp"
#include "an/lemma_audits.hpp"

namespace an {

/// Canonical certificate document. Field order is fixed:
/// n, ell, faulty, [faulty_labels,] components, satisfied, method, elapsed_ms.
/// Arrays are sorted ascending; faulty_labels appears only when a labeled
/// network is supplied.
nlohmann::ordered_json certificate_json(const CutCertificate& cert,
                                        std::optional<int> dimension = std::nullopt,
                                        const AnNetwork* labels = nullptr);

/// {"lemma", "n", "checked", "violations", "passed"}.
nlohmann::ordered_json lemma_report_json(const LemmaReport& report);

nlohmann::ordered_json kappa_result_json(const KappaResult& result,
                                         std::optional<int> dimension = std::nullopt,
                                         const AnNetwork* labels = nullptr);

/// {"n", "vertex_count", "labels", "edges"}.
nlohmann::ordered_json graph_json(const TopologyGraph& g,
                                  std::optional<int> dimension = std::nullopt,
                                  const AnNetwork* labels = nullptr);

}  // namespace an
