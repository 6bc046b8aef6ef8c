#include "cwc/boundary.hpp"
#include "cwc/expansion.hpp"
#include "cwc/f2.hpp"
#include "cwc/jacobi.hpp"
#include "cwc/spectral.hpp"
#include "cwc/zoo.hpp"

#include <benchmark/benchmark.h>

using namespace cwc;

static void BM_laplacian_eigen_torus(benchmark::State& state) {
    CWComplex x = zoo("torus_7");
    for (auto _ : state) {
        Mat lap = laplacian(x, 1, LapKind::full);
        benchmark::DoNotOptimize(sym_eigen(lap));
    }
}
BENCHMARK(BM_laplacian_eigen_torus);

static void BM_smallest_nontrivial_eigenvalue(benchmark::State& state) {
    CWComplex x = zoo("torus_7");
    for (auto _ : state)
        benchmark::DoNotOptimize(smallest_nontrivial_eigenvalue(x, 1, LapKind::lower));
}
BENCHMARK(BM_smallest_nontrivial_eigenvalue);

static void BM_f2_rank(benchmark::State& state) {
    F2Matrix m(128, 128);
    uint64_t s = 0x9e3779b97f4a7c15ull;
    for (int r = 0; r < 128; ++r)
        for (int c = 0; c < 128; ++c) {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            m.set(r, c, s & 1);
        }
    for (auto _ : state) benchmark::DoNotOptimize(f2_rank_nullspace(m));
}
BENCHMARK(BM_f2_rank);

static void BM_boundary_expansion_rp2(benchmark::State& state) {
    CWComplex x = zoo("rp2_6");
    for (auto _ : state) benchmark::DoNotOptimize(boundary_expansion(x, 2));
}
BENCHMARK(BM_boundary_expansion_rp2);

static void BM_boundary_expansion_mid_torus(benchmark::State& state) {
    CWComplex x = zoo("torus_7");
    for (auto _ : state) benchmark::DoNotOptimize(boundary_expansion(x, 1));
}
BENCHMARK(BM_boundary_expansion_mid_torus);

static void BM_sweep(benchmark::State& state) {
    CWComplex x = zoo("tetra_minus_face");
    auto spec = smallest_nontrivial_eigenvalue(x, 2, LapKind::lower);
    for (auto _ : state) benchmark::DoNotOptimize(sweep(x, spec.eigenvector));
}
BENCHMARK(BM_sweep);

static void BM_cheeger_report(benchmark::State& state) {
    CWComplex x = zoo("torus_7");
    for (auto _ : state) benchmark::DoNotOptimize(cheeger_check(x));
}
BENCHMARK(BM_cheeger_report);

BENCHMARK_MAIN();
