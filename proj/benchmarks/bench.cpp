#include <benchmark/benchmark.h>

#include "tropnet/ideal.hpp"
#include "tropnet/latin.hpp"
#include "tropnet/mat3.hpp"
#include "tropnet/multipoly.hpp"
#include "tropnet/prover.hpp"
#include "tropnet/tropical.hpp"

using namespace tropnet;

static void BM_Determinant(benchmark::State& state) {
    Mat3 T = standard_degeneration();
    for (auto _ : state) {
        benchmark::DoNotOptimize(mat3_det(T));
    }
}
BENCHMARK(BM_Determinant);

static void BM_Adjugate(benchmark::State& state) {
    Mat3 T = standard_degeneration();
    for (auto _ : state) {
        benchmark::DoNotOptimize(mat3_adjugate(T));
    }
}
BENCHMARK(BM_Adjugate);

static void BM_Reduce(benchmark::State& state) {
    RingPtr ring = make_ring({"k1", "k2", "k3"});
    MultiPoly k1 = MultiPoly::variable(ring, 0);
    MultiPoly k2 = MultiPoly::variable(ring, 1);
    MultiPoly k3 = MultiPoly::variable(ring, 2);
    MultiPoly one = MultiPoly::constant(ring, 1);
    MultiPoly p = k1 * k2 * k3 * k3 - k1 * k2 + k3 - one;
    std::vector<MultiPoly> basis{k3 - one + k1 * k2, k2 * k2 - k2 + one};
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce(p, basis));
    }
}
BENCHMARK(BM_Reduce);

static void BM_CompleteBasis43(benchmark::State& state) {
    NetSkeleton s = build_43_skeleton();
    ConstraintSystem sys = generate_constraints(s, s.net);
    for (auto _ : state) {
        benchmark::DoNotOptimize(complete_basis({sys.ring, sys.equations, {}}));
    }
}
BENCHMARK(BM_CompleteBasis43);

static void BM_ClassifyLines(benchmark::State& state) {
    Mat3 T = standard_degeneration();
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_line_symbolic(T));
    }
}
BENCHMARK(BM_ClassifyLines);

static void BM_EnumerateOls4(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_ols(4));
    }
}
BENCHMARK(BM_EnumerateOls4);

BENCHMARK_MAIN();
