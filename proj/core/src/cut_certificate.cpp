#include "an/cut_certificate.hpp"

#include <stdexcept>

namespace an {

std::string_view shape_name(ComponentShape s) {
    switch (s) {
        case ComponentShape::singleton: return "singleton";
        case ComponentShape::edge: return "edge";
        case ComponentShape::two_path: return "2-path";
        case ComponentShape::three_cycle: return "3-cycle";
        case ComponentShape::claw: return "claw";
        case ComponentShape::paw: return "paw";
        case ComponentShape::three_path: return "3-path";
        case ComponentShape::other: return "other";
    }
    return "other";
}

ComponentShape classify_component(const TopologyGraph& g, const VertexSet& component) {
    const auto ids = component.to_vector();
    const std::size_t m = ids.size();
    if (m == 1) return ComponentShape::singleton;
    if (m > 4 || m == 0) return ComponentShape::other;

    int edges = 0;
    int max_deg = 0;
    for (std::size_t i = 0; i < m; ++i) {
        int deg = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && g.adjacent(ids[i], ids[j])) ++deg;
        max_deg = std::max(max_deg, deg);
        edges += deg;
    }
    edges /= 2;

    if (m == 2) return edges == 1 ? ComponentShape::edge : ComponentShape::other;
    if (m == 3) {
        if (edges == 2) return ComponentShape::two_path;
        if (edges == 3) return ComponentShape::three_cycle;
        return ComponentShape::other;
    }
    // m == 4
    if (edges == 3) return max_deg == 3 ? ComponentShape::claw : ComponentShape::three_path;
    if (edges == 4) {
        // paw iff a triangle is present; the only triangle-free option with
        // 4 vertices and 4 edges is the 4-cycle
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                for (std::size_t c = b + 1; c < m; ++c)
                    if (g.adjacent(ids[a], ids[b]) && g.adjacent(ids[b], ids[c]) &&
                        g.adjacent(ids[a], ids[c]))
                        return ComponentShape::paw;
        return ComponentShape::other;
    }
    return ComponentShape::other;
}

std::vector<std::size_t> CutCertificate::component_sizes() const {
    std::vector<std::size_t> out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(c.count());
    return out;
}

std::size_t CutCertificate::surviving_vertices() const {
    std::size_t total = 0;
    for (const auto& c : components) total += c.count();
    return total;
}

CutCertificate verify_cut(const TopologyGraph& g, const VertexSet& faulty, int ell) {
    if (faulty.universe() != g.vertex_count())
        throw std::invalid_argument("faulty set universe mismatch");
    if (faulty.empty()) throw std::invalid_argument("faulty set must be non-empty");
    if (ell < 2) throw std::invalid_argument("ell must be at least 2");

    CutCertificate cert;
    cert.ell = ell;
    cert.faulty = faulty;
    cert.components = components_after_removal(g, faulty);
    cert.shapes.reserve(cert.components.size());
    for (const auto& c : cert.components) cert.shapes.push_back(classify_component(g, c));
    const std::size_t surviving = g.vertex_count() - faulty.count();
    cert.satisfied = cert.components.size() >= static_cast<std::size_t>(ell) ||
                     surviving < static_cast<std::size_t>(ell);
    return cert;
}

}  // namespace an
