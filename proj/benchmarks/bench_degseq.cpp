#include <benchmark/benchmark.h>

#include <degseq/bounds.hpp>
#include <degseq/enumerate.hpp>
#include <degseq/erdos_gallai.hpp>
#include <degseq/extremal.hpp>
#include <degseq/realize.hpp>

using namespace degseq;

// Witness sequences have n ~ d^2/4, so the run-length engine should stay
// flat while the per-index scan grows with n.

static void BM_EgRle(benchmark::State& state) {
    const DegreeSequence seq = witness_nongraphic(state.range(0));
    for (auto _ : state) {
        auto rep = erdos_gallai_check(seq, EgEngine::Rle);
        benchmark::DoNotOptimize(rep);
    }
    state.counters["n"] = static_cast<double>(seq.n());
}
BENCHMARK(BM_EgRle)->Arg(64)->Arg(512)->Arg(4096)->Arg(32768);

static void BM_EgNaive(benchmark::State& state) {
    const DegreeSequence seq = witness_nongraphic(state.range(0));
    for (auto _ : state) {
        auto rep = erdos_gallai_check(seq, EgEngine::Naive);
        benchmark::DoNotOptimize(rep);
    }
    state.counters["n"] = static_cast<double>(seq.n());
}
BENCHMARK(BM_EgNaive)->Arg(64)->Arg(512)->Arg(4096);

static void BM_EgManyRuns(benchmark::State& state) {
    // Worst case for the run engine: every value distinct.
    std::vector<Run> runs;
    for (std::uint64_t v = state.range(0); v >= 1; --v) runs.push_back({v, 1});
    const DegreeSequence seq = DegreeSequence::from_runs(std::move(runs));
    for (auto _ : state) {
        auto rep = erdos_gallai_check(seq, EgEngine::Rle);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_EgManyRuns)->Arg(256)->Arg(4096);

static void BM_Enumerate(benchmark::State& state) {
    for (auto _ : state) {
        SequenceEnumerator en(10, 6);
        std::uint64_t count = 0;
        while (auto s = en.next()) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_Enumerate);

static void BM_BoundsSummary(benchmark::State& state) {
    const DegreeSequence seq = gap_example(100);
    for (auto _ : state) {
        auto s = bounds_summary(seq);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_BoundsSummary);

static void BM_HavelHakimi(benchmark::State& state) {
    const DegreeSequence seq = gap_example(state.range(0));
    for (auto _ : state) {
        auto g = havel_hakimi_realize(seq);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_HavelHakimi)->Arg(8)->Arg(24);

BENCHMARK_MAIN();
