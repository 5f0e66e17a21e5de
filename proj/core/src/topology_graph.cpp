#include "an/topology_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace an {

namespace {

void build_from_sorted_lists(std::size_t vertex_count,
                             const std::vector<std::vector<VertexId>>& lists,
                             std::size_t bit_row_threshold,
                             std::vector<std::size_t>& offsets, std::vector<VertexId>& adj,
                             std::size_t& words_per_row, std::vector<std::uint64_t>& rows) {
    offsets.assign(vertex_count + 1, 0);
    std::size_t total = 0;
    for (std::size_t v = 0; v < vertex_count; ++v) {
        offsets[v] = total;
        total += lists[v].size();
    }
    offsets[vertex_count] = total;
    adj.clear();
    adj.reserve(total);
    for (std::size_t v = 0; v < vertex_count; ++v)
        adj.insert(adj.end(), lists[v].begin(), lists[v].end());

    if (vertex_count > 0 && vertex_count <= bit_row_threshold) {
        words_per_row = (vertex_count + 63) / 64;
        rows.assign(vertex_count * words_per_row, 0);
        for (std::size_t v = 0; v < vertex_count; ++v)
            for (VertexId u : lists[v])
                rows[v * words_per_row + (u >> 6)] |= 1ULL << (u & 63);
    } else {
        words_per_row = 0;
        rows.clear();
    }
}

}  // namespace

TopologyGraph TopologyGraph::from_edges(std::size_t vertex_count,
                                        std::span<const std::pair<VertexId, VertexId>> edges,
                                        std::size_t bit_row_threshold) {
    std::vector<std::vector<VertexId>> lists(vertex_count);
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop not allowed");
        lists[u].push_back(v);
        lists[v].push_back(u);
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        auto& l = lists[v];
        std::sort(l.begin(), l.end());
        if (std::adjacent_find(l.begin(), l.end()) != l.end())
            throw std::invalid_argument("duplicate edge");
    }
    return from_adjacency(lists, bit_row_threshold);
}

TopologyGraph TopologyGraph::from_adjacency(const std::vector<std::vector<VertexId>>& lists,
                                            std::size_t bit_row_threshold) {
    const std::size_t n = lists.size();
    std::vector<std::vector<VertexId>> sorted = lists;
    for (std::size_t v = 0; v < n; ++v) {
        auto& l = sorted[v];
        std::sort(l.begin(), l.end());
        if (std::adjacent_find(l.begin(), l.end()) != l.end())
            throw std::invalid_argument("duplicate neighbor entry");
        for (VertexId u : l) {
            if (u >= n) throw std::invalid_argument("neighbor id out of range");
            if (u == static_cast<VertexId>(v)) throw std::invalid_argument("self-loop not allowed");
        }
    }
    // symmetry check
    for (std::size_t v = 0; v < n; ++v)
        for (VertexId u : sorted[v])
            if (!std::binary_search(sorted[u].begin(), sorted[u].end(), static_cast<VertexId>(v)))
                throw std::invalid_argument("adjacency not symmetric");

    TopologyGraph g;
    g.vertex_count_ = n;
    build_from_sorted_lists(n, sorted, bit_row_threshold, g.offsets_, g.adj_,
                            g.words_per_row_, g.rows_);
    return g;
}

bool TopologyGraph::adjacent(VertexId u, VertexId v) const {
    if (u >= vertex_count_ || v >= vertex_count_)
        throw std::out_of_range("vertex id out of range");
    if (has_bit_rows()) return (bit_row(u)[v >> 6] >> (v & 63)) & 1ULL;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

VertexSet TopologyGraph::neighbor_set(VertexId v) const {
    VertexSet s(vertex_count_);
    if (has_bit_rows()) {
        auto row = bit_row(v);
        auto w = s.words();
        for (std::size_t i = 0; i < row.size(); ++i) w[i] = row[i];
    } else {
        for (VertexId u : neighbors(v)) s.set(u);
    }
    return s;
}

std::vector<std::pair<VertexId, VertexId>> TopologyGraph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count());
    for (std::size_t v = 0; v < vertex_count_; ++v)
        for (VertexId u : neighbors(static_cast<VertexId>(v)))
            if (u > v) out.emplace_back(static_cast<VertexId>(v), u);
    return out;
}

}  // namespace an
