#include <benchmark/benchmark.h>

#include <random>

#include "nassoc/nassoc.hpp"

using namespace nassoc;

namespace {

void BM_Consequences(benchmark::State& state, const char* system) {
    const auto sys = builtin_system(system);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        clear_consequence_cache();
        benchmark::DoNotOptimize(consequences(sys, n)->dim());
    }
    state.counters["ambient"] = static_cast<double>(multilinear_space_dim(n));
}
BENCHMARK_CAPTURE(BM_Consequences, sas, "sas")->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Consequences, cas, "cas")->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Consequences, as, "as")->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Rref(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<int> dist(-9, 9);
    MatrixQ m(n, n + 4);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Rational(dist(rng), 1 + (i + j) % 3);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m).pivots.size());
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

void BM_EchelonInsert(benchmark::State& state) {
    const auto ncols = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint32_t> col(0, static_cast<std::uint32_t>(ncols - 1));
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<SparseVec> rows;
    for (std::size_t r = 0; r < ncols; ++r) {
        std::map<std::uint32_t, Rational> v;
        for (int k = 0; k < 6; ++k)
            if (int c = coef(rng)) v[col(rng)] = Rational(c);
        rows.emplace_back(v.begin(), v.end());
    }
    for (auto _ : state) {
        EchelonBasis b(ncols);
        for (const auto& r : rows) b.insert(r);
        benchmark::DoNotOptimize(b.rank());
    }
}
BENCHMARK(BM_EchelonInsert)->Arg(60)->Arg(120)->Arg(240)->Unit(benchmark::kMillisecond);

void BM_CheckIdentitySymbolic(benchmark::State& state) {
    const auto corpus = Corpus::load(NASSOC_CORPUS_DIR);
    const auto& a = corpus.get("a12");
    const auto cas = builtin_system("cas");
    for (auto _ : state) benchmark::DoNotOptimize(check_identity(a, cas, CheckMode::symbolic).holds);
}
BENCHMARK(BM_CheckIdentitySymbolic)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
