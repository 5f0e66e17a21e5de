#pragma once

#include <iosfwd>
#include <string>

#include "an/topology_graph.hpp"

namespace an {

/// Text edge-list format: one "u v" pair per line, 0-based ids, undirected,
/// no duplicates or self-loops. The vertex count is max id + 1.
TopologyGraph load_edge_list(std::istream& in);
TopologyGraph load_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const TopologyGraph& g);
void write_edge_list_file(const std::string& path, const TopologyGraph& g);

}  // namespace an
