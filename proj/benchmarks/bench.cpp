#include <hlb/ffield.hpp>
#include <hlb/graphs.hpp>
#include <hlb/hl.hpp>
#include <hlb/measures.hpp>

#include <benchmark/benchmark.h>

using namespace hlb;

static void BM_QOracle(benchmark::State& state) {
    int n = (int)state.range(0);
    Partition lam({n, n > 1 ? n - 1 : 0});
    for (auto _ : state) benchmark::DoNotOptimize(hl_q_oracle(lam, lam.size()));
}
BENCHMARK(BM_QOracle)->DenseRange(2, 4);

static void BM_ToPowerSums(benchmark::State& state) {
    auto parts = enumerate_partitions((int)state.range(0));
    for (auto _ : state)
        for (const auto& lam : parts) benchmark::DoNotOptimize(to_power_sums(lam));
}
BENCHMARK(BM_ToPowerSums)->DenseRange(3, 5);

static void BM_BuildGraph(benchmark::State& state) {
    for (auto _ : state) {
        auto g = BranchingGraph::build(GraphKind::GL, (int)state.range(0), Rational(3));
        benchmark::DoNotOptimize(g.edges().size());
    }
}
BENCHMARK(BM_BuildGraph)->DenseRange(4, 6);

static void BM_JordanType(benchmark::State& state) {
    FieldCtx ctx(3);
    FFMatrix a = canonical_nilpotent_gl(Partition({3, 2, 1}), ctx);
    for (auto _ : state) benchmark::DoNotOptimize(jordan_type(a));
}
BENCHMARK(BM_JordanType);

static void BM_CountL(benchmark::State& state) {
    Partition mu({2}), lam({2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(count_L_bruteforce(mu, lam, 3));
}
BENCHMARK(BM_CountL);

static void BM_MarkovGrowth(benchmark::State& state) {
    auto g = BranchingGraph::build(GraphKind::HL, 6, Rational(1, 3));
    auto phi = [t = Rational(1, 3)](const Partition& lam) { return rat_pow(t, lam.n_stat()); };
    for (auto _ : state) benchmark::DoNotOptimize(markov_growth(g, phi, 6, 12345));
}
BENCHMARK(BM_MarkovGrowth);

BENCHMARK_MAIN();
