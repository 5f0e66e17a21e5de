#pragma once

// Internal: unit-capacity vertex cuts via max-flow on the split graph.

#include <optional>
#include <vector>

#include "an/topology_graph.hpp"
#include "an/vertex_set.hpp"

namespace an::detail {

/// s-t vertex connectivity with early cutoff, on the standard split graph
/// (v_in -> v_out with capacity 1, edge arcs unbounded).
class VertexCutSolver {
public:
    explicit VertexCutSolver(const TopologyGraph& g);

    /// min(lambda_v(s,t), cap+1) for distinct non-adjacent s,t.
    int st_cut_capped(VertexId s, VertexId t, int cap);

    /// The separating set matching the last st_cut_capped call that returned
    /// a value <= its cap.
    VertexSet last_cut() const;

    std::uint64_t augmentations() const { return augmentations_; }

private:
    void reset_flow();
    bool bfs_augment(int source, int sink);

    const TopologyGraph& g_;
    // arc arrays: paired arcs (i, i^1) are mutual reverses
    std::vector<int> head_;   // per flow-node index of first arc
    std::vector<int> nxt_;
    std::vector<int> to_;
    std::vector<int> cap_;
    std::vector<int> cap0_;   // initial capacities
    std::vector<int> parent_arc_;
    std::vector<int> bfs_queue_;
    std::vector<std::uint32_t> seen_;
    std::uint32_t stamp_ = 0;
    int last_source_ = -1;
    std::uint64_t augmentations_ = 0;
};

/// Smallest vertex cut of connected g with size <= cap, or nullopt when none
/// exists (in particular for complete graphs). Deterministic.
std::optional<VertexSet> min_vertex_cut_capped(const TopologyGraph& g, int cap,
                                               std::uint64_t* augmentations_out = nullptr);

}  // namespace an::detail
