// Microbenchmarks for the two hot kernels, serial reference vs OpenMP:
// pairwise overlap verification and the maximum-clique search. Both engines
// return identical results by construction, so these runs measure cost only.
//
//   ./build/bench/noc_bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include "noc/code.hpp"
#include "noc/search.hpp"

namespace {

noc::Code verification_workload(int n, int q) {
    // A large non-overlapping code: every pair must be scanned, which is the
    // verifier's worst case.
    return noc::classic_construction(n, q);
}

void BM_VerifySerial(benchmark::State& state) {
    const noc::Code code = verification_workload(static_cast<int>(state.range(0)),
                                                 static_cast<int>(state.range(1)));
    for (auto _ : state) {
        auto witness = noc::find_overlap(code, noc::VerifyMode::Serial);
        benchmark::DoNotOptimize(witness);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(code.size() * code.size()));
}

void BM_VerifyParallel(benchmark::State& state) {
    const noc::Code code = verification_workload(static_cast<int>(state.range(0)),
                                                 static_cast<int>(state.range(1)));
    for (auto _ : state) {
        auto witness = noc::find_overlap(code, noc::VerifyMode::Parallel);
        benchmark::DoNotOptimize(witness);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(code.size() * code.size()));
}

noc::SearchConfig engine_config(noc::EngineMode mode) {
    noc::SearchConfig cfg;
    cfg.mode = mode;
    return cfg;
}

void BM_SearchSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int q = static_cast<int>(state.range(1));
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        const noc::SearchResult r = noc::max_fixed(n, q, engine_config(noc::EngineMode::Serial));
        nodes = r.nodes_expanded;
        benchmark::DoNotOptimize(r.cardinality);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_SearchParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int q = static_cast<int>(state.range(1));
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        const noc::SearchResult r =
            noc::max_fixed(n, q, engine_config(noc::EngineMode::Parallel));
        nodes = r.nodes_expanded;
        benchmark::DoNotOptimize(r.cardinality);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}

} // namespace

// Verification: 1024 words of length 6 (q=5) and 2401 words of length 5 (q=8).
BENCHMARK(BM_VerifySerial)->Args({6, 5})->Args({5, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Args({6, 5})->Args({5, 8})->Unit(benchmark::kMillisecond);

// Search: the largest exactly solved points that stay interactive.
BENCHMARK(BM_SearchSerial)->Args({5, 3})->Args({4, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Args({5, 3})->Args({4, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
