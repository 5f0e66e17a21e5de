#include "an/connectivity.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "an/fragment_enum.hpp"
#include "vertex_cut.hpp"

namespace an {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

bool graph_is_connected(const TopologyGraph& g) {
    if (g.vertex_count() == 0) return true;
    ComponentScanner scan(g);
    return scan.count_components(VertexSet(g.vertex_count()), 2) <= 1;
}

bool graph_is_complete(const TopologyGraph& g) {
    const std::size_t n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

VertexSet first_k_ids(std::size_t universe, int k) {
    VertexSet f(universe);
    for (int i = 0; i < k; ++i) f.set(static_cast<VertexId>(i));
    return f;
}

CutCertificate make_witness(const TopologyGraph& g, const VertexSet& f, int ell,
                            KappaMethod method, std::chrono::milliseconds elapsed) {
    CutCertificate cert = verify_cut(g, f, ell);
    cert.method = std::string(kappa_method_name(method));
    cert.elapsed_ms = elapsed.count();
    if (!cert.satisfied) throw std::logic_error("engine produced an unsatisfied witness");
    return cert;
}

// ---- exhaustive engine ----------------------------------------------------

struct SliceHit {
    bool found = false;
    VertexSet faulty;
};

// Lexicographically first satisfying k-subset whose first element lies in
// [first_lo, first_hi), plus the number of subsets tested.
SliceHit scan_slice(const TopologyGraph& g, int ell, int k, VertexId first_lo, VertexId first_hi,
                    std::uint64_t& tested) {
    const int n = static_cast<int>(g.vertex_count());
    ComponentScanner scan(g);
    SliceHit hit;
    std::vector<int> idx(static_cast<std::size_t>(k));
    VertexSet f(g.vertex_count());
    for (int first = static_cast<int>(first_lo); first < static_cast<int>(first_hi); ++first) {
        if (n - first < k) break;
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = first + i;
        while (true) {
            f.clear();
            for (int i : idx) f.set(static_cast<VertexId>(i));
            ++tested;
            const int comps = scan.count_components(f, ell);
            if (comps >= ell || static_cast<std::size_t>(n - k) < static_cast<std::size_t>(ell)) {
                hit.found = true;
                hit.faulty = f;
                return hit;
            }
            // next combination with fixed first element
            int p = k - 1;
            while (p >= 1 && idx[static_cast<std::size_t>(p)] == n - k + p) --p;
            if (p < 1) break;
            ++idx[static_cast<std::size_t>(p)];
            for (int q = p + 1; q < k; ++q)
                idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
        }
    }
    return hit;
}

}  // namespace

std::string_view kappa_method_name(KappaMethod m) {
    switch (m) {
        case KappaMethod::exhaustive: return "exhaustive";
        case KappaMethod::fragment: return "fragment";
        case KappaMethod::maxflow: return "maxflow";
        case KappaMethod::convention: return "convention";
    }
    return "exhaustive";
}

KappaResult vertex_connectivity(const TopologyGraph& g, const SolveOptions& opts) {
    (void)opts;
    const auto start = Clock::now();
    const std::size_t n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("vertex connectivity needs at least two vertices");
    if (!graph_is_connected(g)) throw std::invalid_argument("graph must be connected");

    KappaResult result;
    if (graph_is_complete(g)) {
        result.value = static_cast<int>(n) - 1;
        result.method = KappaMethod::convention;
        result.nodes_explored = 1;
        result.elapsed = since(start);
        result.witness = make_witness(g, first_k_ids(n, result.value), 2, result.method, result.elapsed);
        return result;
    }
    std::uint64_t augmentations = 0;
    auto cut = detail::min_vertex_cut_capped(g, static_cast<int>(n) - 2, &augmentations);
    if (!cut) throw std::logic_error("connected non-complete graph must have a vertex cut");
    result.value = static_cast<int>(cut->count());
    result.method = KappaMethod::maxflow;
    result.nodes_explored = augmentations;
    result.elapsed = since(start);
    result.witness = make_witness(g, *cut, 2, result.method, result.elapsed);
    return result;
}

std::optional<KappaResult> kappa_ell_exhaustive(const TopologyGraph& g, int ell, int k_max,
                                                const SolveOptions& opts) {
    const auto start = Clock::now();
    if (ell < 2) throw std::invalid_argument("ell must be at least 2");
    if (!graph_is_connected(g)) throw std::invalid_argument("graph must be connected");
    const int n = static_cast<int>(g.vertex_count());
    k_max = std::min(k_max, n);
    std::uint64_t tested_total = 0;

    for (int k = 1; k <= k_max; ++k) {
        if (n - k < ell) {
            // every k-subset satisfies the few-survivors branch; the
            // lexicographically first is {0..k-1}
            ++tested_total;
            KappaResult result;
            result.value = k;
            result.method = KappaMethod::exhaustive;
            result.nodes_explored = tested_total;
            result.elapsed = since(start);
            result.witness = make_witness(g, first_k_ids(static_cast<std::size_t>(n), k), ell,
                                          result.method, result.elapsed);
            return result;
        }

        const int workers = std::max(1, std::min(opts.workers, n));
        std::vector<SliceHit> hits(static_cast<std::size_t>(workers));
        std::vector<std::uint64_t> tested(static_cast<std::size_t>(workers), 0);
        if (workers == 1) {
            hits[0] = scan_slice(g, ell, k, 0, static_cast<VertexId>(n), tested[0]);
        } else {
            std::vector<std::thread> threads;
            threads.reserve(static_cast<std::size_t>(workers));
            for (int w = 0; w < workers; ++w) {
                threads.emplace_back([&, w] {
                    const auto lo = static_cast<VertexId>(static_cast<std::int64_t>(n) * w / workers);
                    const auto hi = static_cast<VertexId>(static_cast<std::int64_t>(n) * (w + 1) / workers);
                    hits[static_cast<std::size_t>(w)] =
                        scan_slice(g, ell, k, lo, hi, tested[static_cast<std::size_t>(w)]);
                });
            }
            for (auto& t : threads) t.join();
        }
        for (auto c : tested) tested_total += c;
        for (const auto& hit : hits) {
            if (!hit.found) continue;
            // slices are ordered by first element, so the first hit is the
            // lexicographically smallest satisfying set of this size
            KappaResult result;
            result.value = k;
            result.method = KappaMethod::exhaustive;
            result.nodes_explored = tested_total;
            result.elapsed = since(start);
            result.witness = make_witness(g, hit.faulty, ell, result.method, result.elapsed);
            return result;
        }
    }
    return std::nullopt;
}

// ---- fragment engine -------------------------------------------------------

namespace {

struct FragmentDepthSearch {
    const TopologyGraph& g;
    int ell;
    int k;
    const std::vector<Fragment>& pool;
    std::vector<std::size_t> position_cap;  // cap for tuple position i (0-based)
    std::uint64_t tuples_examined = 0;

    std::optional<VertexSet> best;

    void consider(const VertexSet& faulty) {
        if (!best || faulty.count() < best->count() ||
            (faulty.count() == best->count() && VertexSet::lex_less(faulty, *best)))
            best = faulty;
    }

    // closed = union of chosen interiors and boundaries so far
    void choose(std::size_t position, std::size_t start_idx, const VertexSet& interiors,
                const VertexSet& boundary_union, const VertexSet& closed) {
        const std::size_t positions = static_cast<std::size_t>(ell - 2);
        for (std::size_t idx = start_idx; idx < pool.size(); ++idx) {
            const Fragment& fr = pool[idx];
            const std::size_t size = fr.interior.count();
            if (size > position_cap[position]) break;  // pool sorted by size
            if (fr.interior.intersects(closed)) continue;
            VertexSet bu = boundary_union | fr.boundary;
            if (bu.count() > static_cast<std::size_t>(k)) continue;
            ++tuples_examined;
            VertexSet ints = interiors | fr.interior;
            if (position + 1 == positions) {
                finalize(ints, bu);
            } else {
                VertexSet cl = closed | fr.interior | fr.boundary;
                choose(position + 1, idx + 1, ints, bu, cl);
            }
        }
    }

    void finalize(const VertexSet& interiors, const VertexSet& boundary_union) {
        VertexSet rest = interiors | boundary_union;
        rest = rest.complement();
        const std::size_t rest_size = rest.count();
        if (rest_size < 2) return;
        const int slack = k - static_cast<int>(boundary_union.count());
        auto sub = induced_subgraph(g, rest);
        ComponentScanner scan(sub.graph);
        if (scan.count_components(VertexSet(rest_size), 2) >= 2) {
            consider(boundary_union);
            return;
        }
        if (slack <= 0) return;
        auto cut = detail::min_vertex_cut_capped(sub.graph, slack);
        if (!cut) return;
        VertexSet faulty = boundary_union;
        cut->for_each([&](VertexId v) { faulty.set(sub.to_parent[v]); });
        consider(faulty);
    }
};

}  // namespace

std::optional<KappaResult> kappa_ell_fragment_search(const TopologyGraph& g, int ell, int k_max,
                                                     const SolveOptions& opts) {
    const auto start = Clock::now();
    if (ell < 2 || ell > 6) throw std::invalid_argument("fragment engine supports 2 <= ell <= 6");
    if (!graph_is_connected(g)) throw std::invalid_argument("graph must be connected");
    const int n = static_cast<int>(g.vertex_count());
    k_max = std::min(k_max, n);
    std::uint64_t nodes_total = 0;

    const bool complete = graph_is_complete(g);
    int kappa2 = n - 1;
    VertexSet kappa2_cut(g.vertex_count());
    if (!complete) {
        std::uint64_t aug = 0;
        auto cut = detail::min_vertex_cut_capped(g, n - 2, &aug);
        nodes_total += aug;
        if (!cut) throw std::logic_error("connected non-complete graph must have a vertex cut");
        kappa2 = static_cast<int>(cut->count());
        kappa2_cut = *cut;
    }

    auto finish = [&](int value, const VertexSet& faulty) {
        KappaResult result;
        result.value = value;
        result.method = KappaMethod::fragment;
        result.nodes_explored = nodes_total;
        result.elapsed = since(start);
        result.witness = make_witness(g, faulty, ell, result.method, result.elapsed);
        return result;
    };

    for (int k = 1; k <= k_max; ++k) {
        if (n - k < ell) return finish(k, first_k_ids(static_cast<std::size_t>(n), k));
        if (complete) continue;       // no vertex cut exists at any size
        if (k < kappa2) continue;     // ell components need a vertex cut

        if (ell == 2) return finish(kappa2, kappa2_cut);

        // pool of candidate small components: boundary within the shared
        // budget k, size within the largest enumerated position's cap
        FragmentEnumOptions fopts;
        fopts.boundary_budget = k;
        fopts.max_size = std::max(1, (n - k) / 3);
        std::uint64_t pool_nodes = 0;
        std::vector<Fragment> pool =
            collect_fragments_parallel(g, fopts, opts.workers, &pool_nodes);
        nodes_total += pool_nodes;
        std::sort(pool.begin(), pool.end(), [](const Fragment& a, const Fragment& b) {
            const auto ca = a.interior.count(), cb = b.interior.count();
            if (ca != cb) return ca < cb;
            return VertexSet::lex_less(a.interior, b.interior);
        });

        const std::size_t positions = static_cast<std::size_t>(ell - 2);
        std::vector<std::size_t> caps(positions);
        for (std::size_t i = 0; i < positions; ++i)
            caps[i] = static_cast<std::size_t>((n - k) / (ell - static_cast<int>(i + 1) + 1));

        const int workers = std::max(1, std::min<int>(opts.workers, static_cast<int>(pool.size())));
        std::vector<std::optional<VertexSet>> results(static_cast<std::size_t>(workers));
        std::vector<std::uint64_t> tuple_counts(static_cast<std::size_t>(workers), 0);

        auto run_range = [&](int w, std::size_t lo, std::size_t hi) {
            FragmentDepthSearch search{g, ell, k, pool, caps, 0, std::nullopt};
            for (std::size_t idx = lo; idx < hi; ++idx) {
                const Fragment& fr = search.pool[idx];
                const std::size_t size = fr.interior.count();
                if (size > caps[0]) break;
                ++search.tuples_examined;
                VertexSet bu = fr.boundary;
                if (bu.count() > static_cast<std::size_t>(k)) continue;
                if (positions == 1) {
                    search.finalize(fr.interior, bu);
                } else {
                    VertexSet cl = fr.interior | fr.boundary;
                    search.choose(1, idx + 1, fr.interior, bu, cl);
                }
            }
            results[static_cast<std::size_t>(w)] = search.best;
            tuple_counts[static_cast<std::size_t>(w)] = search.tuples_examined;
        };

        if (workers <= 1) {
            run_range(0, 0, pool.size());
        } else {
            std::vector<std::thread> threads;
            threads.reserve(static_cast<std::size_t>(workers));
            for (int w = 0; w < workers; ++w) {
                const std::size_t lo = pool.size() * static_cast<std::size_t>(w) / static_cast<std::size_t>(workers);
                const std::size_t hi = pool.size() * static_cast<std::size_t>(w + 1) / static_cast<std::size_t>(workers);
                threads.emplace_back(run_range, w, lo, hi);
            }
            for (auto& t : threads) t.join();
        }
        for (auto c : tuple_counts) nodes_total += c;

        std::optional<VertexSet> best;
        for (const auto& r : results) {
            if (!r) continue;
            if (!best || r->count() < best->count() ||
                (r->count() == best->count() && VertexSet::lex_less(*r, *best)))
                best = *r;
        }
        if (best) return finish(static_cast<int>(best->count()), *best);
    }
    return std::nullopt;
}

}  // namespace an
