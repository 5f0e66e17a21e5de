#pragma once

#include <array>

#include "an/an_network.hpp"
#include "an/vertex_set.hpp"

namespace an {

/// N(v): removing it disconnects the network (for n >= 4), isolating v.
VertexSet cut_vertex_neighborhood(const AnNetwork& net, VertexId v);

/// N({u,v}) for an edge (u,v); throws when u,v are not adjacent.
VertexSet cut_edge_neighborhood(const AnNetwork& net, VertexId u, VertexId v);

struct SixCycleCut {
    VertexSet faulty;                 // N({v1,v3,v5}); size 3n-6
    std::array<VertexId, 6> cycle;    // the induced 6-cycle used
};

/// The constructive upper-bound cut: neighbors of the three alternate
/// vertices of the lexicographically smallest induced 6-cycle. Removing it
/// leaves three singletons and one large component. Requires n >= 4; throws
/// when no induced 6-cycle exists.
SixCycleCut cut_six_cycle(const AnNetwork& net);

}  // namespace an
