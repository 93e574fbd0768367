#include <benchmark/benchmark.h>

#include "hcwand/bipartite.hpp"
#include "hcwand/exact_verify.hpp"
#include "hcwand/scan.hpp"
#include "hcwand/tree_sim.hpp"

namespace {

void BM_SolveTiQ2(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hcwand::solve_ti_q2(k, 1.7));
}
BENCHMARK(BM_SolveTiQ2)->Arg(2)->Arg(5);

void BM_EnumerateTiQ4(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    double lam = 1.5 * hcwand::lambda_cr1(k, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(hcwand::enumerate_ti_q4(k, lam, 1.0));
}
BENCHMARK(BM_EnumerateTiQ4)->Arg(2)->Arg(5);

void BM_BipQ2TwoCycle(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    double lam = 0.5 * hcwand::lambda_cr2(k);
    for (auto _ : state) benchmark::DoNotOptimize(hcwand::solve_bip_q2(k, lam));
}
BENCHMARK(BM_BipQ2TwoCycle)->Arg(2)->Arg(5);

void BM_Theta1Poly(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hcwand::exact::theta1_poly(k));
}
BENCHMARK(BM_Theta1Poly)->Arg(4)->Arg(12);

void BM_TreeStep(benchmark::State& state) {
    int M = static_cast<int>(state.range(0));
    auto acts = hcwand::ActivityProfile::ti_q2(1.0);
    double a = hcwand::solve_ti_q2(2, 1.0);
    auto law = hcwand::make_boundary(hcwand::BoundaryKind::ExactPattern, M, {1.0, a}, 0.0, 0);
    std::vector<hcwand::TruncatedLaw> children(2, law);
    for (auto _ : state) benchmark::DoNotOptimize(hcwand::step(children, 2, acts, M));
}
BENCHMARK(BM_TreeStep)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
