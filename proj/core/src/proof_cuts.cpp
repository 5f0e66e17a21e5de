#include "an/proof_cuts.hpp"

#include <stdexcept>

#include "an/graph_algorithms.hpp"

namespace an {

VertexSet cut_vertex_neighborhood(const AnNetwork& net, VertexId v) {
    if (v >= net.graph().vertex_count()) throw std::out_of_range("vertex id out of range");
    return net.graph().neighbor_set(v);
}

VertexSet cut_edge_neighborhood(const AnNetwork& net, VertexId u, VertexId v) {
    const auto& g = net.graph();
    if (u >= g.vertex_count() || v >= g.vertex_count())
        throw std::out_of_range("vertex id out of range");
    if (!g.adjacent(u, v)) throw std::invalid_argument("cut_edge_neighborhood needs an edge");
    VertexSet s = VertexSet::of(g.vertex_count(), {u, v});
    return open_neighborhood(g, s);
}

SixCycleCut cut_six_cycle(const AnNetwork& net) {
    if (net.n() < 4) throw std::invalid_argument("cut_six_cycle needs n >= 4");
    const auto& g = net.graph();
    auto cycle = find_induced_six_cycle(g);
    if (!cycle) throw std::runtime_error("no induced 6-cycle found");
    SixCycleCut out;
    out.cycle = *cycle;
    VertexSet odd = VertexSet::of(g.vertex_count(), {(*cycle)[0], (*cycle)[2], (*cycle)[4]});
    out.faulty = open_neighborhood(g, odd);
    return out;
}

}  // namespace an
