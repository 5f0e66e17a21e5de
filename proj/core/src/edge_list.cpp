#include "an/edge_list.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace an {

TopologyGraph load_edge_list(std::istream& in) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::string line;
    std::size_t max_id = 0;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        long long u = -1, v = -1;
        if (!(ls >> u >> v) || u < 0 || v < 0) {
            std::string tail;
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": expected two non-negative ids");
        }
        std::string tail;
        if (ls >> tail)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": trailing content");
        if (u == v)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": self-loop");
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        max_id = std::max<std::size_t>(max_id, static_cast<std::size_t>(std::max(u, v)));
    }
    if (edges.empty()) throw std::invalid_argument("edge list is empty");
    return TopologyGraph::from_edges(max_id + 1, edges);
}

TopologyGraph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open edge list file: " + path);
    return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const TopologyGraph& g) {
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const TopologyGraph& g) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    write_edge_list(out, g);
}

}  // namespace an
