#pragma once

#include <array>
#include <optional>
#include <vector>

#include "an/topology_graph.hpp"
#include "an/vertex_set.hpp"

namespace an {

/// Connected components of g - f, sorted ascending by size with ties broken
/// by smallest member id.
std::vector<VertexSet> components_after_removal(const TopologyGraph& g, const VertexSet& f);

/// Vertices outside s adjacent to at least one member of s.
VertexSet open_neighborhood(const TopologyGraph& g, const VertexSet& s);

/// True iff the subgraph induced by s is connected. Empty and singleton
/// sets count as connected.
bool is_connected_subset(const TopologyGraph& g, const VertexSet& s);

/// True iff g contains a (not necessarily induced) cycle of length exactly k.
/// Requires 3 <= k <= |V|.
bool has_cycle_of_length(const TopologyGraph& g, int k);

/// Lexicographically smallest ordered tuple (v1..v6) forming an induced
/// 6-cycle: consecutive pairs adjacent (cyclically), all other pairs not.
std::optional<std::array<VertexId, 6>> find_induced_six_cycle(const TopologyGraph& g);

/// Maximum BFS eccentricity. Throws when g is disconnected or empty.
int all_pairs_diameter(const TopologyGraph& g);

/// BFS eccentricity of a single vertex.
int eccentricity(const TopologyGraph& g, VertexId source);

struct InducedSubgraph {
    TopologyGraph graph;
    std::vector<VertexId> to_parent;  // new id -> id in the parent graph
};

/// Subgraph induced by s, with vertices renumbered in ascending id order.
InducedSubgraph induced_subgraph(const TopologyGraph& g, const VertexSet& s);

/// Reusable scratch for component counting in tight enumeration loops.
/// Not thread-safe; give each worker its own scanner.
class ComponentScanner {
public:
    explicit ComponentScanner(const TopologyGraph& g);

    /// Number of connected components of g - f, stopping early once
    /// stop_at components have been seen (the return value saturates).
    int count_components(const VertexSet& f, int stop_at);

    /// True iff g - f is connected (vacuously true when empty).
    bool connected_after_removal(const VertexSet& f) { return count_components(f, 2) <= 1; }

private:
    const TopologyGraph& g_;
    VertexSet alive_, comp_, frontier_, next_;
    std::vector<VertexId> queue_;     // list-graph path
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
};

}  // namespace an
