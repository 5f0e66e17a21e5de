#include "an/an_network.hpp"

#include <stdexcept>
#include <utility>

namespace an {

Permutation AnNetwork::label(VertexId v) const {
    if (v >= graph_.vertex_count()) throw std::out_of_range("vertex id out of range");
    const std::size_t off = static_cast<std::size_t>(v) * static_cast<std::size_t>(n_);
    return Permutation(std::vector<std::uint8_t>(packed_labels_.begin() + static_cast<std::ptrdiff_t>(off),
                                                 packed_labels_.begin() + static_cast<std::ptrdiff_t>(off + static_cast<std::size_t>(n_))));
}

std::string AnNetwork::label_string(VertexId v) const { return label(v).to_string(); }

int AnNetwork::last_symbol(VertexId v) const {
    if (v >= graph_.vertex_count()) throw std::out_of_range("vertex id out of range");
    return packed_labels_[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(n_ - 1)];
}

VertexId AnNetwork::vertex_of(const Permutation& p) const {
    if (p.size() != n_) throw std::invalid_argument("permutation dimension mismatch");
    return static_cast<VertexId>(rank_even(p));
}

AnNetwork build_an(int n, const AnBuildOptions& opts) {
    if (n < 3) throw std::invalid_argument("alternating group networks need n >= 3");
    const int hard_cap = 12;  // 12!/2 ids still fit in 32 bits
    if (n > opts.dimension_cap || n > hard_cap)
        throw std::invalid_argument("dimension exceeds the configured cap");

    const std::uint64_t count = even_permutation_count(n);
    AnNetwork net;
    net.n_ = n;
    net.packed_labels_.resize(count * static_cast<std::uint64_t>(n));

    std::vector<std::vector<VertexId>> lists(count);
    for (std::uint64_t r = 0; r < count; ++r) {
        const Permutation p = unrank_even(n, r);
        const auto& syms = p.symbols();
        std::copy(syms.begin(), syms.end(),
                  net.packed_labels_.begin() + static_cast<std::ptrdiff_t>(r * static_cast<std::uint64_t>(n)));
        auto& l = lists[r];
        l.reserve(static_cast<std::size_t>(n - 1));
        for (const Permutation& q : an_neighbors(p)) l.push_back(static_cast<VertexId>(rank_even(q)));
    }
    net.graph_ = TopologyGraph::from_adjacency(lists, opts.bit_row_threshold);
    return net;
}

std::size_t SubnetPartition::pair_index(int i, int j) const {
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("invalid class pair");
    if (i > j) std::swap(i, j);
    // upper-triangle index of (i,j), 1-based symbols
    const std::size_t a = static_cast<std::size_t>(i - 1);
    const std::size_t b = static_cast<std::size_t>(j - 1);
    return a * static_cast<std::size_t>(n) - a * (a + 1) / 2 + (b - a - 1);
}

SubnetPartition subnet_partition(const AnNetwork& net) {
    const int n = net.n();
    const auto& g = net.graph();
    SubnetPartition part;
    part.n = n;
    part.classes.assign(static_cast<std::size_t>(n), VertexSet(g.vertex_count()));
    part.cross.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2, {});

    for (VertexId v = 0; v < g.vertex_count(); ++v)
        part.classes[static_cast<std::size_t>(net.last_symbol(v) - 1)].set(v);

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const int cv = net.last_symbol(v);
        for (VertexId u : g.neighbors(v)) {
            if (u <= v) continue;
            const int cu = net.last_symbol(u);
            if (cu != cv) part.cross[part.pair_index(cv, cu)].emplace_back(v, u);
        }
    }
    return part;
}

bool class_matches_lower_dimension(const AnNetwork& net, int class_symbol) {
    const int n = net.n();
    if (n < 4) throw std::invalid_argument("needs n >= 4");
    if (class_symbol < 1 || class_symbol > n) throw std::invalid_argument("bad class symbol");
    const AnNetwork ref = build_an(n - 1);
    const auto& g = net.graph();

    // dropping the rightmost symbol c flips parity by (n - c) mod 2; a fixed
    // symbol transposition restores evenness
    const bool fix_parity = ((n - class_symbol) % 2) != 0;
    std::vector<VertexId> members;
    std::vector<std::int64_t> to_ref(g.vertex_count(), -1);
    std::vector<bool> hit(ref.graph().vertex_count(), false);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (net.last_symbol(v) != class_symbol) continue;
        members.push_back(v);
        const Permutation p = net.label(v);
        std::vector<std::uint8_t> prefix(p.symbols().begin(), p.symbols().end() - 1);
        for (auto& s : prefix) {
            if (s > class_symbol) s = static_cast<std::uint8_t>(s - 1);
            if (fix_parity) {
                if (s == 1) s = 2;
                else if (s == 2) s = 1;
            }
        }
        const VertexId r = static_cast<VertexId>(rank_even(Permutation(prefix)));
        if (hit[r]) return false;
        hit[r] = true;
        to_ref[v] = r;
    }
    if (members.size() != ref.graph().vertex_count()) return false;

    std::size_t internal_edges = 0;
    for (VertexId v : members) {
        for (VertexId u : g.neighbors(v)) {
            if (u <= v || net.last_symbol(u) != class_symbol) continue;
            ++internal_edges;
            if (!ref.graph().adjacent(static_cast<VertexId>(to_ref[v]),
                                      static_cast<VertexId>(to_ref[u])))
                return false;
        }
    }
    return internal_edges == ref.graph().edge_count();
}

VertexId out_neighbor(const AnNetwork& net, VertexId v) {
    if (net.n() < 4) throw std::invalid_argument("out_neighbor needs n >= 4");
    if (v >= net.graph().vertex_count()) throw std::out_of_range("vertex id out of range");
    const int cls = net.last_symbol(v);
    for (VertexId u : net.graph().neighbors(v))
        if (net.last_symbol(u) != cls) return u;
    throw std::logic_error("vertex without an out-neighbor");
}

}  // namespace an
