#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "an/cut_certificate.hpp"
#include "an/topology_graph.hpp"

namespace an {

enum class KappaMethod { exhaustive, fragment, maxflow, convention };

std::string_view kappa_method_name(KappaMethod m);

struct KappaResult {
    int value = 0;
    CutCertificate witness;
    KappaMethod method = KappaMethod::exhaustive;
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};
};

struct SolveOptions {
    int workers = 1;
};

/// Classical connectivity kappa(G) = kappa_2(G). Complete graphs get the
/// |V|-1 convention with the witness marked accordingly; otherwise the value
/// comes from unit-capacity max-flow over non-adjacent pairs and the witness
/// is an actual separating set. Throws for |V| < 2 or disconnected input.
KappaResult vertex_connectivity(const TopologyGraph& g, const SolveOptions& opts = {});

/// Smallest non-empty F with |F| <= k_max such that G - F has at least ell
/// components or fewer than ell surviving vertices, by subset enumeration in
/// size order then lexicographic order; the witness is the first satisfying
/// set. nullopt when no such F exists within k_max. Throws on disconnected
/// input or ell < 2.
std::optional<KappaResult> kappa_ell_exhaustive(const TopologyGraph& g, int ell, int k_max,
                                                const SolveOptions& opts = {});

/// Same value contract as kappa_ell_exhaustive, computed by iterative
/// deepening on the cut size k: the ell-2 smallest would-be components are
/// enumerated as fragments whose boundaries share the budget k, and the
/// remainder is required to split via a capped minimum vertex cut. Sizes of
/// the enumerated fragments are bounded by (|V|-k)/(ell-i+1) for the i-th
/// smallest. Supports 2 <= ell <= 6.
std::optional<KappaResult> kappa_ell_fragment_search(const TopologyGraph& g, int ell, int k_max,
                                                     const SolveOptions& opts = {});

}  // namespace an
