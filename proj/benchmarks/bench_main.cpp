#include <hlbip/generate.hpp>
#include <hlbip/graphs.hpp>
#include <hlbip/hl.hpp>
#include <hlbip/l2.hpp>
#include <hlbip/realization.hpp>

#include <benchmark/benchmark.h>

using namespace hlbip;

namespace {

void bm_rank(benchmark::State& state) {
    Matrix A = random_rational_matrix(static_cast<int>(state.range(0)), 7, false,
                                      false);
    for (auto _ : state) benchmark::DoNotOptimize(A.rank());
}
BENCHMARK(bm_rank)->Arg(6)->Arg(8)->Arg(10);

void bm_inverse(benchmark::State& state) {
    Matrix A = random_invertible_matrix(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(A.inverse());
}
BENCHMARK(bm_inverse)->Arg(6)->Arg(8)->Arg(10);

void bm_hl_family(benchmark::State& state) {
    Matrix A = random_sign_matrix(static_cast<int>(state.range(0)), 13, true,
                                  true);
    for (auto _ : state) benchmark::DoNotOptimize(hl_family(A));
}
BENCHMARK(bm_hl_family)->Arg(6)->Arg(8)->Arg(10);

void bm_splits(benchmark::State& state) {
    Graph G = random_graph(static_cast<int>(state.range(0)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(splits(G));
}
BENCHMARK(bm_splits)->Arg(8)->Arg(10)->Arg(12);

void bm_clans(benchmark::State& state) {
    Matrix A = random_sign_matrix(static_cast<int>(state.range(0)), 19, true,
                                  true);
    L2Structure g = L2Structure::from_matrix(A);
    for (auto _ : state) benchmark::DoNotOptimize(g.clans());
}
BENCHMARK(bm_clans)->Arg(6)->Arg(8)->Arg(10);

void bm_normalize(benchmark::State& state) {
    Matrix A = random_rational_matrix(static_cast<int>(state.range(0)), 23,
                                      false, true);
    for (auto _ : state) benchmark::DoNotOptimize(normalize(A, 1, 29));
}
BENCHMARK(bm_normalize)->Arg(5)->Arg(6)->Arg(7);

void bm_realize(benchmark::State& state) {
    BipartitionFamily F = random_weakly_bipartitive_family(
        static_cast<int>(state.range(0)), 31);
    for (auto _ : state) benchmark::DoNotOptimize(realize(F));
}
BENCHMARK(bm_realize)->Arg(5)->Arg(6)->Arg(7);

} // namespace

BENCHMARK_MAIN();
