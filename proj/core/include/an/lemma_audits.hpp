#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "an/an_network.hpp"
#include "an/cut_certificate.hpp"

namespace an {

struct AuditViolation {
    std::string what;
    std::vector<VertexId> instance;
    std::string observed;
    std::string expected;
};

struct LemmaReport {
    std::string lemma_id;
    int n = 0;
    std::uint64_t instances_checked = 0;
    std::vector<AuditViolation> violations;
    bool passed = false;
    /// Extra observations (shape histograms, observed extrema); reported on
    /// the console, not part of the JSON schema.
    std::vector<std::pair<std::string, std::string>> notes;
};

struct AuditOptions {
    int workers = 1;
    std::uint64_t sample_seed = 1;
    int samples_per_size = 2000;
};

/// Structural facts of the network itself: no 4- or 5-cycle, out-neighbors
/// pairwise distinct within every class, exactly (n-2)!/2 external edges
/// between every class pair. Requires n >= 4.
LemmaReport verify_basic_lemma(const AnNetwork& net, const AuditOptions& opts = {});

/// Neighborhood sizes of small connected induced subgraphs inside one
/// subnetwork class (with a second class as spot check): 3-vertex subgraphs
/// are 3-cycles (|N| = 3n-12) or 2-paths (3n-11 <= |N| <= 3n-10); 4-vertex
/// ones satisfy |N| >= 4n-16 with per-shape refinements; sampled sizes 5..8
/// exceed 4n-16. Requires n >= 6.
LemmaReport verify_subgraph_neighborhood_bounds(const AnNetwork& net,
                                                const AuditOptions& opts = {});

/// Component-shape claims for every vertex cut up to a size threshold.
enum class SmallCutClaim {
    two_components_2n5,     // k <= 2n-5: two components, small side a singleton or edge
    three_components_3n10,  // k <= 3n-10: as above, or three components with two singletons
    improved_two_2n4,       // k <= 2n-4: two components, small side from the per-n shape list
    extended_3n7,           // k <= 3n-7: small side up to a 3-cycle or 2-path, or two singletons
};

LemmaReport verify_small_cut_structure(const AnNetwork& net, int k_max, SmallCutClaim claim,
                                       const AuditOptions& opts = {});

/// Every claim applicable to net.n(), sharing a single subset scan up to the
/// largest requested threshold (the extended claim is capped at
/// extended_k_cap; pass 3n-7 to run it in full).
std::vector<LemmaReport> verify_small_cuts_all(const AnNetwork& net, int extended_k_cap,
                                               const AuditOptions& opts = {});

/// n = 5: every disconnecting 4-subset is the neighborhood of a vertex and
/// leaves a singleton plus one component; no 3-subset disconnects.
/// n = 4: exhibits a minimum cut that is not any vertex neighborhood.
/// n >= 6: sampled.
LemmaReport verify_super_connectivity(const AnNetwork& net, const AuditOptions& opts = {});

/// Exhaustive inventory of the vertex cuts of size <= k_max, in subset
/// lexicographic order. Each record is the full decomposition certificate,
/// so memory grows with the cut count; the claim audits above stream
/// instead and should be preferred for large thresholds.
struct SmallCutSurvey {
    int k_max = 0;
    std::uint64_t subsets_enumerated = 0;
    std::vector<CutCertificate> cuts;
};

SmallCutSurvey survey_small_cuts(const TopologyGraph& g, int k_max, int workers = 1);

}  // namespace an
