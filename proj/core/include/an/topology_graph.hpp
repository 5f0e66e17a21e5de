#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "an/vertex_set.hpp"

namespace an {

/// Immutable undirected simple graph. Adjacency is kept as sorted CSR lists
/// and, when the vertex count is at most bit_row_threshold, additionally as
/// fixed-width bit rows so set-valued traversals run word-parallel.
class TopologyGraph {
public:
    static constexpr std::size_t kDefaultBitRowThreshold = 4096;

    TopologyGraph() = default;

    static TopologyGraph from_edges(std::size_t vertex_count,
                                    std::span<const std::pair<VertexId, VertexId>> edges,
                                    std::size_t bit_row_threshold = kDefaultBitRowThreshold);

    /// lists[v] are the neighbors of v; must be symmetric, loop-free, duplicate-free.
    static TopologyGraph from_adjacency(const std::vector<std::vector<VertexId>>& lists,
                                        std::size_t bit_row_threshold = kDefaultBitRowThreshold);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return adj_.size() / 2; }

    int degree(VertexId v) const {
        return static_cast<int>(offsets_[v + 1] - offsets_[v]);
    }
    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    bool has_bit_rows() const { return words_per_row_ > 0; }
    std::size_t words_per_row() const { return words_per_row_; }
    std::span<const std::uint64_t> bit_row(VertexId v) const {
        return {rows_.data() + v * words_per_row_, words_per_row_};
    }

    bool adjacent(VertexId u, VertexId v) const;

    /// Neighbors of v as a VertexSet over [0, vertex_count).
    VertexSet neighbor_set(VertexId v) const;

    std::vector<std::pair<VertexId, VertexId>> edges() const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::size_t> offsets_;   // size vertex_count_+1
    std::vector<VertexId> adj_;          // sorted per vertex
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> rows_;    // row-major bit rows when enabled
};

}  // namespace an
