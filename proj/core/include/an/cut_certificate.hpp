#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "an/graph_algorithms.hpp"
#include "an/topology_graph.hpp"

namespace an {

/// Shape vocabulary for components with at most four vertices.
enum class ComponentShape {
    singleton,   // 1 vertex
    edge,        // 2 vertices, 1 edge
    two_path,    // 3 vertices, 2 edges
    three_cycle, // 3 vertices, 3 edges
    claw,        // 4 vertices, 3 edges, star
    paw,         // 4 vertices, 4 edges, contains a triangle
    three_path,  // 4 vertices, 3 edges, path
    other,
};

std::string_view shape_name(ComponentShape s);

ComponentShape classify_component(const TopologyGraph& g, const VertexSet& component);

/// Verifiable witness: a faulty set plus the component decomposition of
/// g - faulty, with shapes for the small components and the l-component
/// condition evaluated (at least ell components, or fewer than ell
/// surviving vertices).
struct CutCertificate {
    int ell = 0;
    VertexSet faulty;
    std::vector<VertexSet> components;       // ascending by (size, min id)
    std::vector<ComponentShape> shapes;      // aligned with components
    bool satisfied = false;
    std::string method = "verify";
    std::int64_t elapsed_ms = 0;

    std::vector<std::size_t> component_sizes() const;
    std::size_t surviving_vertices() const;
};

/// Decomposes g - faulty and evaluates the condition. Throws when faulty is
/// empty or not a subset of the vertex set.
CutCertificate verify_cut(const TopologyGraph& g, const VertexSet& faulty, int ell);

}  // namespace an
