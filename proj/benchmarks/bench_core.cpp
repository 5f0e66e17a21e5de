#include <benchmark/benchmark.h>

#include "an/an_network.hpp"
#include "an/connectivity.hpp"
#include "an/fragment_enum.hpp"
#include "an/graph_algorithms.hpp"
#include "an/permutation.hpp"

using namespace an;

static void BM_BuildNetwork(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        AnNetwork net = build_an(n);
        benchmark::DoNotOptimize(net.graph().edge_count());
    }
}
BENCHMARK(BM_BuildNetwork)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

static void BM_RankUnrankRoundTrip(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::uint64_t count = even_permutation_count(n);
    std::uint64_t r = 0;
    for (auto _ : state) {
        const Permutation p = unrank_even(n, r);
        benchmark::DoNotOptimize(rank_even(p));
        r = (r + 12345) % count;
    }
}
BENCHMARK(BM_RankUnrankRoundTrip)->Arg(6)->Arg(9);

static void BM_ComponentsAfterNeighborhoodRemoval(benchmark::State& state) {
    const AnNetwork net = build_an(5);
    const VertexSet f = net.graph().neighbor_set(0);
    for (auto _ : state) {
        auto comps = components_after_removal(net.graph(), f);
        benchmark::DoNotOptimize(comps.size());
    }
}
BENCHMARK(BM_ComponentsAfterNeighborhoodRemoval);

static void BM_ComponentScanner(benchmark::State& state) {
    const AnNetwork net = build_an(5);
    ComponentScanner scanner(net.graph());
    const VertexSet f = net.graph().neighbor_set(0);
    for (auto _ : state) benchmark::DoNotOptimize(scanner.count_components(f, 4));
}
BENCHMARK(BM_ComponentScanner);

static void BM_FragmentEnumeration(benchmark::State& state) {
    const AnNetwork net = build_an(5);
    const int budget = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::uint64_t count = 0;
        enumerate_fragments(net.graph(), (60 - budget) / 3, budget, [&](const Fragment&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_FragmentEnumeration)->Arg(5)->Arg(7)->Arg(9);

static void BM_VertexConnectivity(benchmark::State& state) {
    const AnNetwork net = build_an(5);
    for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(net.graph()).value);
}
BENCHMARK(BM_VertexConnectivity);

static void BM_FourComponentFragmentSearch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const AnNetwork net = build_an(n);
    for (auto _ : state) {
        auto r = kappa_ell_fragment_search(net.graph(), 4, 3 * n - 5);
        benchmark::DoNotOptimize(r->value);
    }
}
BENCHMARK(BM_FourComponentFragmentSearch)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
