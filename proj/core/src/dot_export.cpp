#include "an/dot_export.hpp"

#include <sstream>
#include <stdexcept>

namespace an {

std::string export_dot(const TopologyGraph& g, const std::vector<std::string>* labels,
                       const std::string& name) {
    if (labels && labels->size() != g.vertex_count())
        throw std::invalid_argument("label count mismatch");
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        os << "  " << v;
        if (labels) os << " [label=\"" << (*labels)[v] << "\"]";
        os << ";\n";
    }
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace an
