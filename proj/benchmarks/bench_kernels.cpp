#include <random>

#include <benchmark/benchmark.h>

#include <diffset/bounds.hpp>
#include <diffset/enumerate.hpp>
#include <diffset/fringe.hpp>
#include <diffset/subset_mask.hpp>

using namespace diffset;

static void BM_NonnegativeDifferences(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::vector<std::uint64_t> masks(1024);
    for (auto& m : masks) m = rng();
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nonnegative_differences(masks[i++ & 1023]));
    }
}
BENCHMARK(BM_NonnegativeDifferences);

static void BM_DistTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dist_table(n));
    state.counters["subsets/s"] =
        benchmark::Counter(static_cast<double>(std::uint64_t{1} << n), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_DistTable)->DenseRange(16, 24, 4)->Unit(benchmark::kMillisecond);

static void BM_CondDistTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cond_dist_table(n));
}
BENCHMARK(BM_CondDistTable)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_FringeNaive(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fringe_naive(m, true));
}
BENCHMARK(BM_FringeNaive)->DenseRange(8, 10, 1)->Unit(benchmark::kMillisecond);

static void BM_FringeFast(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    FringeOptions o;
    o.use_symmetry = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(fringe_fast(m, true, o));
    state.counters["pairs/s"] = benchmark::Counter(static_cast<double>(std::uint64_t{1} << (2 * m - 2)),
                                                   benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_FringeFast)->ArgsProduct({{10, 13, 16}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_Sample(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sample_missing(256, 10000, 1, 1));
}
BENCHMARK(BM_Sample)->Unit(benchmark::kMillisecond);

static void BM_BoundsReport(benchmark::State& state) {
    const auto counts = published_conditioned_fringe_m23();
    for (auto _ : state) benchmark::DoNotOptimize(build_bounds_report(counts));
}
BENCHMARK(BM_BoundsReport)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
