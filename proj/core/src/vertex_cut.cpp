#include "vertex_cut.hpp"

#include <algorithm>
#include <stdexcept>

namespace an::detail {

namespace {
constexpr int kUnbounded = 1 << 28;
}

VertexCutSolver::VertexCutSolver(const TopologyGraph& g) : g_(g) {
    const std::size_t n = g.vertex_count();
    const std::size_t nodes = 2 * n;
    head_.assign(nodes, -1);
    const std::size_t arc_count = 2 * n + 4 * g.edge_count();
    nxt_.reserve(arc_count);
    to_.reserve(arc_count);
    cap0_.reserve(arc_count);

    auto add_arc = [&](int from, int to, int cap) {
        to_.push_back(to);
        cap0_.push_back(cap);
        nxt_.push_back(head_[static_cast<std::size_t>(from)]);
        head_[static_cast<std::size_t>(from)] = static_cast<int>(to_.size()) - 1;
    };
    auto add_pair = [&](int from, int to, int cap) {
        add_arc(from, to, cap);
        add_arc(to, from, 0);
    };

    // v_in = 2v, v_out = 2v+1
    for (VertexId v = 0; v < n; ++v) add_pair(2 * static_cast<int>(v), 2 * static_cast<int>(v) + 1, 1);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u : g.neighbors(v))
            add_pair(2 * static_cast<int>(v) + 1, 2 * static_cast<int>(u), kUnbounded);

    cap_ = cap0_;
    parent_arc_.assign(nodes, -1);
    seen_.assign(nodes, 0);
    bfs_queue_.reserve(nodes);
}

void VertexCutSolver::reset_flow() { cap_ = cap0_; }

bool VertexCutSolver::bfs_augment(int source, int sink) {
    ++stamp_;
    if (stamp_ == 0) {
        std::fill(seen_.begin(), seen_.end(), 0);
        stamp_ = 1;
    }
    bfs_queue_.clear();
    bfs_queue_.push_back(source);
    seen_[static_cast<std::size_t>(source)] = stamp_;
    for (std::size_t qi = 0; qi < bfs_queue_.size(); ++qi) {
        const int v = bfs_queue_[qi];
        for (int a = head_[static_cast<std::size_t>(v)]; a >= 0; a = nxt_[static_cast<std::size_t>(a)]) {
            if (cap_[static_cast<std::size_t>(a)] <= 0) continue;
            const int u = to_[static_cast<std::size_t>(a)];
            if (seen_[static_cast<std::size_t>(u)] == stamp_) continue;
            seen_[static_cast<std::size_t>(u)] = stamp_;
            parent_arc_[static_cast<std::size_t>(u)] = a;
            if (u == sink) {
                // augment by one unit along the path
                int node = sink;
                while (node != source) {
                    const int arc = parent_arc_[static_cast<std::size_t>(node)];
                    cap_[static_cast<std::size_t>(arc)] -= 1;
                    cap_[static_cast<std::size_t>(arc ^ 1)] += 1;
                    node = to_[static_cast<std::size_t>(arc ^ 1)];
                }
                ++augmentations_;
                return true;
            }
            bfs_queue_.push_back(u);
        }
    }
    return false;
}

int VertexCutSolver::st_cut_capped(VertexId s, VertexId t, int cap) {
    if (s == t) throw std::invalid_argument("st cut endpoints must differ");
    if (g_.adjacent(s, t)) throw std::invalid_argument("st cut endpoints must be non-adjacent");
    reset_flow();
    last_source_ = 2 * static_cast<int>(s) + 1;
    const int sink = 2 * static_cast<int>(t);
    int flow = 0;
    while (flow <= cap && bfs_augment(last_source_, sink)) ++flow;
    return flow;
}

VertexSet VertexCutSolver::last_cut() const {
    // residual reachability from the last source; cut vertices are those
    // whose split arc crosses the frontier
    VertexSet cut(g_.vertex_count());
    std::vector<bool> reach(head_.size(), false);
    std::vector<int> queue{last_source_};
    reach[static_cast<std::size_t>(last_source_)] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int v = queue[qi];
        for (int a = head_[static_cast<std::size_t>(v)]; a >= 0; a = nxt_[static_cast<std::size_t>(a)]) {
            if (cap_[static_cast<std::size_t>(a)] <= 0) continue;
            const int u = to_[static_cast<std::size_t>(a)];
            if (!reach[static_cast<std::size_t>(u)]) {
                reach[static_cast<std::size_t>(u)] = true;
                queue.push_back(u);
            }
        }
    }
    for (VertexId v = 0; v < g_.vertex_count(); ++v)
        if (reach[2 * static_cast<std::size_t>(v)] && !reach[2 * static_cast<std::size_t>(v) + 1])
            cut.set(v);
    return cut;
}

std::optional<VertexSet> min_vertex_cut_capped(const TopologyGraph& g, int cap,
                                               std::uint64_t* augmentations_out) {
    const std::size_t n = g.vertex_count();
    if (cap < 0) return std::nullopt;
    VertexCutSolver solver(g);
    int best = cap + 1;
    std::optional<VertexSet> best_cut;
    // Scanning sources 0..best suffices: a minimum cut of size kappa <= cap
    // misses at least one of any kappa+1 distinct vertices, and best never
    // drops below kappa.
    for (VertexId s = 0; s < n; ++s) {
        if (static_cast<int>(s) > best) break;
        for (VertexId t = 0; t < n; ++t) {
            if (t == s || g.adjacent(s, t)) continue;
            const int f = solver.st_cut_capped(s, t, best - 1);
            if (f < best) {
                best = f;
                best_cut = solver.last_cut();
            }
        }
    }
    if (augmentations_out) *augmentations_out = solver.augmentations();
    if (best <= cap) return best_cut;
    return std::nullopt;
}

}  // namespace an::detail
