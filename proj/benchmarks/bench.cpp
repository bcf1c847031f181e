#include <benchmark/benchmark.h>

#include "zdga/report.hpp"

namespace {

void BM_BuildRing(benchmark::State& state, const char* spec) {
    for (auto _ : state) benchmark::DoNotOptimize(zdga::build_ring(spec, {1024}));
}
BENCHMARK_CAPTURE(BM_BuildRing, z64, "Z64");
BENCHMARK_CAPTURE(BM_BuildRing, gf256, "GF(256)");
BENCHMARK_CAPTURE(BM_BuildRing, z4xz9xz25, "Z4xZ9xZ25");

void BM_BuildGraph(benchmark::State& state, const char* spec) {
    zdga::FiniteRing ring = zdga::build_ring(spec);
    for (auto _ : state) benchmark::DoNotOptimize(zdga::build_graph(ring));
}
BENCHMARK_CAPTURE(BM_BuildGraph, z256, "Z256");
BENCHMARK_CAPTURE(BM_BuildGraph, z6xz35, "Z6xZ35");

void BM_AllianceNumber(benchmark::State& state, const char* spec) {
    zdga::ZeroDivisorGraph g = zdga::build_graph(zdga::build_ring(spec));
    for (auto _ : state) benchmark::DoNotOptimize(zdga::alliance_number(g).value);
}
BENCHMARK_CAPTURE(BM_AllianceNumber, z32, "Z32");
BENCHMARK_CAPTURE(BM_AllianceNumber, z3xz9, "Z3xZ9");

void BM_PsiG(benchmark::State& state, const char* spec) {
    zdga::ZeroDivisorGraph g = zdga::build_graph(zdga::build_ring(spec));
    int gamma_a = zdga::alliance_number(g).value;
    for (auto _ : state) benchmark::DoNotOptimize(zdga::psi_g(g, gamma_a).value);
}
BENCHMARK_CAPTURE(BM_PsiG, gf4xgf4, "GF(4)xGF(4)");
BENCHMARK_CAPTURE(BM_PsiG, z2xz3xz3, "Z2xZ3xZ3");
BENCHMARK_CAPTURE(BM_PsiG, z125, "Z125");

} // namespace

BENCHMARK_MAIN();
