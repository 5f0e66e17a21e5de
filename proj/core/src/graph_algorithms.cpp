#include "an/graph_algorithms.hpp"

#include <algorithm>
#include <stdexcept>

namespace an {

namespace {

// Expand one bitset component from seed within alive; returns it in comp.
void grow_component_bits(const TopologyGraph& g, const VertexSet& alive, VertexId seed,
                         VertexSet& comp, VertexSet& frontier, VertexSet& next) {
    comp.clear();
    frontier.clear();
    comp.set(seed);
    frontier.set(seed);
    const std::size_t W = g.words_per_row();
    while (!frontier.empty()) {
        auto nw = next.words();
        for (std::size_t i = 0; i < W; ++i) nw[i] = 0;
        frontier.for_each([&](VertexId v) {
            auto row = g.bit_row(v);
            for (std::size_t i = 0; i < W; ++i) nw[i] |= row[i];
        });
        auto aw = alive.words();
        auto cw = comp.words();
        auto fw = frontier.words();
        for (std::size_t i = 0; i < W; ++i) {
            fw[i] = nw[i] & aw[i] & ~cw[i];
            cw[i] |= fw[i];
        }
    }
}

void grow_component_lists(const TopologyGraph& g, const VertexSet& alive, VertexId seed,
                          VertexSet& comp, std::vector<VertexId>& queue) {
    comp.clear();
    queue.clear();
    comp.set(seed);
    queue.push_back(seed);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const VertexId v = queue[qi];
        for (VertexId u : g.neighbors(v)) {
            if (alive.test(u) && !comp.test(u)) {
                comp.set(u);
                queue.push_back(u);
            }
        }
    }
}

}  // namespace

std::vector<VertexSet> components_after_removal(const TopologyGraph& g, const VertexSet& f) {
    if (f.universe() != g.vertex_count())
        throw std::invalid_argument("faulty set universe mismatch");
    VertexSet alive = f.complement();
    std::vector<VertexSet> comps;
    VertexSet comp(g.vertex_count()), frontier(g.vertex_count()), next(g.vertex_count());
    std::vector<VertexId> queue;
    for (int seed = alive.first(); seed >= 0; seed = alive.first()) {
        if (g.has_bit_rows())
            grow_component_bits(g, alive, static_cast<VertexId>(seed), comp, frontier, next);
        else
            grow_component_lists(g, alive, static_cast<VertexId>(seed), comp, queue);
        alive -= comp;
        comps.push_back(comp);
    }
    std::sort(comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) {
        const auto ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a.first() < b.first();
    });
    return comps;
}

VertexSet open_neighborhood(const TopologyGraph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("set universe mismatch");
    VertexSet nb(g.vertex_count());
    if (g.has_bit_rows()) {
        auto w = nb.words();
        const std::size_t W = g.words_per_row();
        s.for_each([&](VertexId v) {
            auto row = g.bit_row(v);
            for (std::size_t i = 0; i < W; ++i) w[i] |= row[i];
        });
    } else {
        s.for_each([&](VertexId v) {
            for (VertexId u : g.neighbors(v)) nb.set(u);
        });
    }
    nb -= s;
    return nb;
}

bool is_connected_subset(const TopologyGraph& g, const VertexSet& s) {
    const auto size = s.count();
    if (size <= 1) return true;
    const int seed = s.first();
    VertexSet comp(g.vertex_count());
    if (g.has_bit_rows()) {
        VertexSet frontier(g.vertex_count()), next(g.vertex_count());
        grow_component_bits(g, s, static_cast<VertexId>(seed), comp, frontier, next);
    } else {
        std::vector<VertexId> queue;
        grow_component_lists(g, s, static_cast<VertexId>(seed), comp, queue);
    }
    return comp.count() == size;
}

bool has_cycle_of_length(const TopologyGraph& g, int k) {
    const int n = static_cast<int>(g.vertex_count());
    if (k < 3 || k > n) throw std::invalid_argument("cycle length out of range");
    // Search simple paths of k vertices whose minimum vertex is the start;
    // a closing edge back to the start witnesses the cycle.
    std::vector<VertexId> path;
    std::vector<bool> on_path(g.vertex_count(), false);
    bool found = false;

    auto dfs = [&](auto&& self, VertexId start, VertexId v, int depth) -> void {
        if (found) return;
        if (depth == k) {
            if (g.adjacent(v, start)) found = true;
            return;
        }
        for (VertexId u : g.neighbors(v)) {
            if (u <= start || on_path[u]) continue;
            on_path[u] = true;
            self(self, start, u, depth + 1);
            on_path[u] = false;
            if (found) return;
        }
    };

    for (VertexId start = 0; start < g.vertex_count() && !found; ++start) {
        on_path[start] = true;
        dfs(dfs, start, start, 1);
        on_path[start] = false;
    }
    return found;
}

std::optional<std::array<VertexId, 6>> find_induced_six_cycle(const TopologyGraph& g) {
    const std::size_t n = g.vertex_count();
    std::array<VertexId, 6> tuple{};
    std::vector<bool> used(n, false);
    bool found = false;

    // Depth-first in ascending candidate order; the first complete tuple is
    // the lexicographically smallest one.
    auto extend = [&](auto&& self, int depth) -> void {
        if (found) return;
        if (depth == 6) {
            // close the cycle; v6-v1 must be an edge (non-adjacency of the
            // remaining pairs was enforced while extending)
            if (g.adjacent(tuple[5], tuple[0])) found = true;
            return;
        }
        const VertexId prev = tuple[depth - 1];
        for (VertexId c : g.neighbors(prev)) {
            if (used[c]) continue;
            // induced: c must avoid all earlier tuple members except prev,
            // and for depth < 5 it must also avoid v1
            bool ok = true;
            for (int j = 0; j < depth - 1; ++j) {
                if (j == 0 && depth == 5) continue;  // v6 must touch v1
                if (g.adjacent(c, tuple[j])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            tuple[depth] = c;
            used[c] = true;
            self(self, depth + 1);
            used[c] = false;
            if (found) return;
        }
    };

    // neighbors() spans are sorted, so candidate order is ascending
    for (VertexId v1 = 0; v1 < n && !found; ++v1) {
        tuple[0] = v1;
        used[v1] = true;
        extend(extend, 1);
        used[v1] = false;
    }
    if (!found) return std::nullopt;
    return tuple;
}

int eccentricity(const TopologyGraph& g, VertexId source) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<VertexId> queue;
    queue.reserve(g.vertex_count());
    dist[source] = 0;
    queue.push_back(source);
    int ecc = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const VertexId v = queue[qi];
        for (VertexId u : g.neighbors(v)) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                ecc = std::max(ecc, dist[u]);
                queue.push_back(u);
            }
        }
    }
    for (int d : dist)
        if (d < 0) throw std::invalid_argument("graph is disconnected");
    return ecc;
}

int all_pairs_diameter(const TopologyGraph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph has no diameter");
    int diameter = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        diameter = std::max(diameter, eccentricity(g, v));
    return diameter;
}

InducedSubgraph induced_subgraph(const TopologyGraph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("set universe mismatch");
    InducedSubgraph out;
    out.to_parent = s.to_vector();
    std::vector<VertexId> to_new(g.vertex_count(), 0);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) to_new[out.to_parent[i]] = static_cast<VertexId>(i);
    std::vector<std::vector<VertexId>> lists(out.to_parent.size());
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        for (VertexId u : g.neighbors(out.to_parent[i]))
            if (s.test(u)) lists[i].push_back(to_new[u]);
    out.graph = TopologyGraph::from_adjacency(lists);
    return out;
}

ComponentScanner::ComponentScanner(const TopologyGraph& g)
    : g_(g),
      alive_(g.vertex_count()),
      comp_(g.vertex_count()),
      frontier_(g.vertex_count()),
      next_(g.vertex_count()),
      mark_(g.vertex_count(), 0) {}

int ComponentScanner::count_components(const VertexSet& f, int stop_at) {
    int count = 0;
    if (g_.has_bit_rows()) {
        auto aw = alive_.words();
        auto fw = f.words();
        for (std::size_t i = 0; i < aw.size(); ++i) aw[i] = ~fw[i];
        // trim bits beyond the universe
        const std::size_t extra = aw.size() * 64 - g_.vertex_count();
        if (extra && !aw.empty()) aw.back() &= ~0ULL >> extra;
        for (int seed = alive_.first(); seed >= 0; seed = alive_.first()) {
            ++count;
            if (count >= stop_at) return count;
            grow_component_bits(g_, alive_, static_cast<VertexId>(seed), comp_, frontier_, next_);
            alive_ -= comp_;
        }
        return count;
    }
    // list graph: stamped visited array avoids clearing
    ++stamp_;
    if (stamp_ == 0) {
        std::fill(mark_.begin(), mark_.end(), 0);
        stamp_ = 1;
    }
    const std::uint32_t visited = stamp_;
    std::size_t remaining = g_.vertex_count() - f.count();
    for (VertexId seed = 0; seed < g_.vertex_count() && remaining > 0; ++seed) {
        if (f.test(seed) || mark_[seed] == visited) continue;
        ++count;
        if (count >= stop_at) return count;
        queue_.clear();
        queue_.push_back(seed);
        mark_[seed] = visited;
        --remaining;
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            for (VertexId u : g_.neighbors(queue_[qi])) {
                if (mark_[u] != visited && !f.test(u)) {
                    mark_[u] = visited;
                    --remaining;
                    queue_.push_back(u);
                }
            }
        }
    }
    return count;
}

}  // namespace an
