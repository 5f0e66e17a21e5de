#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "an/permutation.hpp"
#include "an/topology_graph.hpp"

namespace an {

struct AnBuildOptions {
    /// Largest dimension accepted. 10!/2 = 1,814,400 vertices is the default
    /// ceiling; the hard limit is 12 so ids fit 32 bits.
    int dimension_cap = 10;
    std::size_t bit_row_threshold = TopologyGraph::kDefaultBitRowThreshold;
};

/// The n-dimensional alternating group network: vertices are the even
/// permutations of {1..n} indexed by their lexicographic rank, edges given
/// by an_neighbors. Immutable once built.
class AnNetwork {
public:
    int n() const { return n_; }
    const TopologyGraph& graph() const { return graph_; }

    Permutation label(VertexId v) const;
    std::string label_string(VertexId v) const;
    /// Rightmost symbol of v's permutation; the subnetwork class of v.
    int last_symbol(VertexId v) const;
    VertexId vertex_of(const Permutation& p) const;

    friend AnNetwork build_an(int n, const AnBuildOptions& opts);

private:
    int n_ = 0;
    TopologyGraph graph_;
    std::vector<std::uint8_t> packed_labels_;  // n bytes per vertex
};

AnNetwork build_an(int n, const AnBuildOptions& opts = {});

struct SubnetPartition {
    int n = 0;
    /// classes[c-1] holds the vertices whose rightmost symbol is c.
    std::vector<VertexSet> classes;
    /// cross[pair_index(i,j)] lists the external edges between classes i and j.
    std::vector<std::vector<std::pair<VertexId, VertexId>>> cross;

    std::size_t pair_index(int i, int j) const;
};

SubnetPartition subnet_partition(const AnNetwork& net);

/// The unique neighbor of v outside v's subnetwork class. Requires n >= 4.
VertexId out_neighbor(const AnNetwork& net, VertexId v);

/// Checks constructively that the class of the given rightmost symbol
/// induces a graph identical to build_an(n-1) after dropping the symbol and
/// relabeling (with a fixed transposition when the drop flips parity).
bool class_matches_lower_dimension(const AnNetwork& net, int class_symbol);

}  // namespace an
