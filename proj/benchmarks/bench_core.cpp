// Microbenchmarks for the hot paths: eigendecomposition-backed entropy,
// partial traces, the SSA verifier, and the triple-matrix closed form.
#include "qei/holevo.hpp"

#include <benchmark/benchmark.h>

using namespace qei;

static void entropy_random_density(benchmark::State& state) {
    int dim = static_cast<int>(state.range(0));
    DensityOperator rho = random_density(dim, 1);
    for (auto _ : state) benchmark::DoNotOptimize(von_neumann_entropy(rho));
}
BENCHMARK(entropy_random_density)->Arg(4)->Arg(16)->Arg(64);

static void partial_trace_tripartite(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    MultipartiteState s(random_density(d * d * d, 2), SystemShape({d, d, d}));
    for (auto _ : state) benchmark::DoNotOptimize(partial_trace(s, {0, 1}));
}
BENCHMARK(partial_trace_tripartite)->Arg(2)->Arg(3)->Arg(4);

static void ssa_check(benchmark::State& state) {
    MultipartiteState s(random_density(8, 3), SystemShape({2, 2, 2}));
    for (auto _ : state) benchmark::DoNotOptimize(check_ssa(s));
}
BENCHMARK(ssa_check);

static void lieb_triple_closed_form(benchmark::State& state) {
    Prng rng(4);
    Prng ra = rng.split(0), rb = rng.split(1), rc = rng.split(2);
    HermitianOperator r(random_positive(3, ra, 0.1));
    HermitianOperator s(random_positive(3, rb, 0.1));
    HermitianOperator t(random_positive(3, rc, 0.1));
    for (auto _ : state)
        benchmark::DoNotOptimize(lieb_triple_gap(r, s, t, -1.0, /*with_quadrature=*/false));
}
BENCHMARK(lieb_triple_closed_form);

static void lieb_triple_with_quadrature(benchmark::State& state) {
    Prng rng(5);
    Prng ra = rng.split(0), rb = rng.split(1), rc = rng.split(2);
    HermitianOperator r(random_positive(3, ra, 0.1));
    HermitianOperator s(random_positive(3, rb, 0.1));
    HermitianOperator t(random_positive(3, rc, 0.1));
    for (auto _ : state) benchmark::DoNotOptimize(lieb_triple_gap(r, s, t));
}
BENCHMARK(lieb_triple_with_quadrature);

static void holevo_chi_bench(benchmark::State& state) {
    int dim = static_cast<int>(state.range(0));
    Ensemble e = random_ensemble(dim, 4, 6);
    for (auto _ : state) benchmark::DoNotOptimize(holevo_chi(e));
}
BENCHMARK(holevo_chi_bench)->Arg(2)->Arg(4)->Arg(8);

static void stinespring_dilation(benchmark::State& state) {
    KrausChannel phi = random_channel(4, 4, 3, 7);
    DensityOperator rho = random_density(4, 8);
    for (auto _ : state) {
        StinespringIsometry iso = stinespring(phi);
        benchmark::DoNotOptimize(iso.v() * rho.mat() * iso.v().adjoint());
    }
}
BENCHMARK(stinespring_dilation);

BENCHMARK_MAIN();
