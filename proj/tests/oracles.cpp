#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace an::oracle {

bool is_even_by_cycle_structure(const std::vector<std::uint8_t>& symbols) {
    const int n = static_cast<int>(symbols.size());
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    int cycles = 0;
    for (int s = 1; s <= n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++cycles;
        int t = s;
        while (!seen[static_cast<std::size_t>(t)]) {
            seen[static_cast<std::size_t>(t)] = true;
            t = symbols[static_cast<std::size_t>(t - 1)];
        }
    }
    return (n - cycles) % 2 == 0;
}

std::vector<std::vector<std::uint8_t>> even_permutations_lex(int n) {
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(n));
    std::iota(cur.begin(), cur.end(), static_cast<std::uint8_t>(1));
    std::vector<std::vector<std::uint8_t>> out;
    do {
        if (is_even_by_cycle_structure(cur)) out.push_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    return out;
}

std::vector<std::vector<VertexId>> components(const TopologyGraph& g,
                                              const std::vector<bool>& removed) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<VertexId>> comps;
    for (VertexId s = 0; s < n; ++s) {
        if (removed[s] || seen[s]) continue;
        std::vector<VertexId> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (VertexId u : g.neighbors(comp[i]))
                if (!removed[u] && !seen[u]) {
                    seen[u] = true;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

int component_count(const TopologyGraph& g, const VertexSet& removed) {
    std::vector<bool> rm(g.vertex_count(), false);
    removed.for_each([&](VertexId v) { rm[v] = true; });
    return static_cast<int>(components(g, rm).size());
}

bool subset_connected(const TopologyGraph& g, const std::vector<VertexId>& subset) {
    if (subset.size() <= 1) return true;
    std::vector<bool> in(g.vertex_count(), false);
    for (VertexId v : subset) in[v] = true;
    std::vector<VertexId> stack{subset[0]};
    std::vector<bool> seen(g.vertex_count(), false);
    seen[subset[0]] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (VertexId u : g.neighbors(v)) {
            if (in[u] && !seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == subset.size();
}

std::vector<VertexId> neighborhood_of(const TopologyGraph& g,
                                      const std::vector<VertexId>& subset) {
    std::vector<bool> in(g.vertex_count(), false);
    for (VertexId v : subset) in[v] = true;
    std::vector<bool> nb(g.vertex_count(), false);
    for (VertexId v : subset)
        for (VertexId u : g.neighbors(v))
            if (!in[u]) nb[u] = true;
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (nb[v]) out.push_back(v);
    return out;
}

namespace {

template <typename F>
void for_each_subset_of_size(std::size_t n, int k, F&& fn) {
    std::vector<VertexId> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0u);
    if (k == 0) return;
    if (static_cast<std::size_t>(k) > n) return;
    while (true) {
        fn(idx);
        int p = k - 1;
        while (p >= 0 && idx[static_cast<std::size_t>(p)] ==
                             static_cast<VertexId>(n - static_cast<std::size_t>(k - p))) --p;
        if (p < 0) break;
        ++idx[static_cast<std::size_t>(p)];
        for (int q = p + 1; q < k; ++q)
            idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
    }
}

}  // namespace

std::set<std::vector<VertexId>> connected_small_sets(const TopologyGraph& g, int max_size,
                                                     int boundary_budget) {
    std::set<std::vector<VertexId>> out;
    for (int k = 1; k <= max_size; ++k) {
        for_each_subset_of_size(g.vertex_count(), k, [&](const std::vector<VertexId>& idx) {
            if (!subset_connected(g, idx)) return;
            if (neighborhood_of(g, idx).size() > static_cast<std::size_t>(boundary_budget)) return;
            out.insert(idx);
        });
    }
    return out;
}

bool cycle_exists(const TopologyGraph& g, int k) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> on_path(n, false);
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
        }
    };
    for (VertexId s = 0; s < n && !found; ++s) {
        on_path[s] = true;
        dfs(dfs, s, s, 1);
        on_path[s] = false;
    }
    return found;
}

std::optional<std::pair<int, std::vector<VertexId>>> kappa_ell(const TopologyGraph& g, int ell,
                                                               int k_max) {
    const std::size_t n = g.vertex_count();
    for (int k = 1; k <= std::min<int>(k_max, static_cast<int>(n)); ++k) {
        std::optional<std::vector<VertexId>> hit;
        for_each_subset_of_size(n, k, [&](const std::vector<VertexId>& idx) {
            if (hit) return;
            std::vector<bool> removed(n, false);
            for (VertexId v : idx) removed[v] = true;
            const auto comps = components(g, removed);
            if (static_cast<int>(comps.size()) >= ell ||
                n - static_cast<std::size_t>(k) < static_cast<std::size_t>(ell))
                hit = idx;
        });
        if (hit) return std::make_pair(k, *hit);
    }
    return std::nullopt;
}

int vertex_connectivity(const TopologyGraph& g) {
    const std::size_t n = g.vertex_count();
    if (g.edge_count() == n * (n - 1) / 2) return static_cast<int>(n) - 1;
    for (int k = 0; k <= static_cast<int>(n) - 2; ++k) {
        bool found = false;
        if (k == 0) {
            std::vector<bool> removed(n, false);
            found = components(g, removed).size() >= 2;
        } else {
            for_each_subset_of_size(n, k, [&](const std::vector<VertexId>& idx) {
                if (found) return;
                std::vector<bool> removed(n, false);
                for (VertexId v : idx) removed[v] = true;
                found = components(g, removed).size() >= 2;
            });
        }
        if (found) return k;
    }
    return static_cast<int>(n) - 1;
}

bool is_induced_six_cycle(const TopologyGraph& g, const std::array<VertexId, 6>& t) {
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            if (t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)]) return false;
            const bool consecutive = (j == i + 1) || (i == 0 && j == 5);
            if (g.adjacent(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]) !=
                consecutive)
                return false;
        }
    return true;
}

std::optional<std::array<VertexId, 6>> lex_min_induced_six_cycle(const TopologyGraph& g) {
    const std::size_t n = g.vertex_count();
    std::array<VertexId, 6> t{};
    // odometer over all ordered 6-tuples in lexicographic order
    auto scan = [&](auto&& self, int pos) -> bool {
        if (pos == 6) return is_induced_six_cycle(g, t);
        for (VertexId v = 0; v < n; ++v) {
            t[static_cast<std::size_t>(pos)] = v;
            if (self(self, pos + 1)) return true;
        }
        return false;
    };
    if (scan(scan, 0)) return t;
    return std::nullopt;
}

int diameter(const TopologyGraph& g) {
    const std::size_t n = g.vertex_count();
    constexpr int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (VertexId v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (VertexId u : g.neighbors(v)) d[v][u] = 1;
    }
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
    int diam = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (d[i][j] >= inf) throw std::invalid_argument("disconnected");
            diam = std::max(diam, d[i][j]);
        }
    return diam;
}

}  // namespace an::oracle
