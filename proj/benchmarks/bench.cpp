#include <benchmark/benchmark.h>

#include <random>

#include "phc/gray.hpp"
#include "phc/realize.hpp"

using namespace phc;

namespace {

Matrix random_matrix(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(coeff(rng));
    return m;
}

void bm_rref(benchmark::State& state) {
    std::mt19937_64 rng(1);
    Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        Matrix c = m;
        benchmark::DoNotOptimize(c.rref());
    }
}
BENCHMARK(bm_rref)->Arg(16)->Arg(32)->Arg(64);

void bm_curvature_space_build(benchmark::State& state) {
    Structure s = standard_para_hermitian(2);
    for (auto _ : state) {
        CurvatureSpace sp(s);
        benchmark::DoNotOptimize(sp.dim());
    }
}
BENCHMARK(bm_curvature_space_build);

void bm_gray_symmetrize(benchmark::State& state) {
    Structure s = standard_para_hermitian(static_cast<std::size_t>(state.range(0)));
    std::mt19937_64 rng(2);
    Tensor4 a = p_operator(random_realization_theta(s, rng));
    for (auto _ : state) benchmark::DoNotOptimize(gray_symmetrize(a, s));
}
BENCHMARK(bm_gray_symmetrize)->Arg(2)->Arg(3);

void bm_p_image(benchmark::State& state) {
    Structure s = standard_para_hermitian(2);
    CurvatureSpace::get(s);  // build outside the loop
    for (auto _ : state) benchmark::DoNotOptimize(p_image_subspace_coords(s, -1));
}
BENCHMARK(bm_p_image);

void bm_riemann_at(benchmark::State& state) {
    Structure s = standard_para_hermitian(static_cast<std::size_t>(state.range(0)));
    std::mt19937_64 rng(3);
    PolyMetric m = realization_metric(random_realization_theta(s, rng), s);
    std::vector<Rational> p(s.dim, Rational(1, 4));
    for (auto _ : state) benchmark::DoNotOptimize(riemann_at(m, p));
}
BENCHMARK(bm_riemann_at)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
