#pragma once

#include <string>
#include <vector>

#include "an/topology_graph.hpp"

namespace an {

/// DOT graph text with deterministic vertex and edge ordering. When labels
/// are given (one per vertex) they are attached as node labels.
std::string export_dot(const TopologyGraph& g, const std::vector<std::string>* labels = nullptr,
                       const std::string& name = "g");

}  // namespace an
