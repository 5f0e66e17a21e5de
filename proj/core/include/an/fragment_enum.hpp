#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "an/topology_graph.hpp"
#include "an/vertex_set.hpp"

namespace an {

/// A connected vertex set together with its open neighborhood.
struct Fragment {
    VertexSet interior;
    VertexSet boundary;
};

struct FragmentEnumOptions {
    int max_size = 1;
    int boundary_budget = 0;
    /// Interior vertices are drawn from this set when given (boundary is
    /// still taken in the full graph).
    const VertexSet* universe = nullptr;
    /// Boundary vertices in this set are not charged against the budget.
    const VertexSet* free_boundary = nullptr;
    /// Enumerate only fragments whose minimum interior id lies in
    /// [seed_begin, seed_end); the default covers every seed.
    VertexId seed_begin = 0;
    VertexId seed_end = static_cast<VertexId>(-1);
};

/// Enumerates every connected set S with 1 <= |S| <= max_size and
/// |N(S) \ free_boundary| <= boundary_budget, each exactly once, by canonical
/// growth from its minimum-id vertex. Partial sets are cut only on a sound
/// lower bound: boundary vertices that can no longer be absorbed (excluded
/// by branching, below the seed, outside the universe, or beyond the
/// remaining size allowance) already exceed the budget.
///
/// The callback returns false to stop. Returns the number of search nodes.
std::uint64_t enumerate_fragments(const TopologyGraph& g, const FragmentEnumOptions& opts,
                                  const std::function<bool(const Fragment&)>& emit);

/// Spec-level convenience: full universe, no free boundary.
std::uint64_t enumerate_fragments(const TopologyGraph& g, int max_size, int boundary_budget,
                                  const std::function<bool(const Fragment&)>& emit);

std::vector<Fragment> collect_fragments(const TopologyGraph& g, const FragmentEnumOptions& opts);

/// Seed-partitioned parallel collection; output is identical to the serial
/// order regardless of worker count.
std::vector<Fragment> collect_fragments_parallel(const TopologyGraph& g,
                                                 const FragmentEnumOptions& opts, int workers,
                                                 std::uint64_t* nodes_out = nullptr);

std::uint64_t count_fragments(const TopologyGraph& g, int max_size, int boundary_budget);

}  // namespace an
