#include <benchmark/benchmark.h>

#include <random>

#include "curvemono/fundgroup.hpp"
#include "curvemono/periods.hpp"

using namespace curvemono;

namespace {

BivariatePolynomial worked_curve() {
    // y^3 - 2 x^3 y - x^9
    std::vector<std::vector<cplx>> a(10, std::vector<cplx>(4, cplx(0.0)));
    a[0][3] = 1.0;
    a[3][1] = -2.0;
    a[9][0] = -1.0;
    return BivariatePolynomial(a);
}

BivariatePolynomial big_curve() {
    // y^9 + 2 x^2 y^6 + 2 x^4 y^3 + x^6 + y^2
    std::vector<std::vector<cplx>> a(7, std::vector<cplx>(10, cplx(0.0)));
    a[0][9] = 1.0;
    a[2][6] = 2.0;
    a[4][3] = 2.0;
    a[6][0] = 1.0;
    a[0][2] = 1.0;
    return BivariatePolynomial(a);
}

UnivariatePolynomial random_poly(int degree, unsigned seed) {
    std::mt19937 gen(seed);
    std::normal_distribution<double> dist;
    std::vector<cplx> c(degree + 1);
    for (auto& v : c) v = cplx(dist(gen), dist(gen));
    if (std::abs(c.back()) < 0.5) c.back() += 1.0;
    return UnivariatePolynomial(c);
}

void bm_roots(benchmark::State& state) {
    auto p = random_poly(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(roots(p));
}
BENCHMARK(bm_roots)->Arg(8)->Arg(18)->Arg(48);

void bm_gauss_legendre(benchmark::State& state) {
    const int ng = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gauss_legendre(ng));
}
BENCHMARK(bm_gauss_legendre)->Arg(16)->Arg(64)->Arg(128);

void bm_resultant(benchmark::State& state) {
    auto f = state.range(0) == 0 ? worked_curve() : big_curve();
    auto fy = f.y_derivative();
    for (auto _ : state) benchmark::DoNotOptimize(sylvester_resultant_y(f, fy));
}
BENCHMARK(bm_resultant)->Arg(0)->Arg(1);

void bm_discriminant(benchmark::State& state) {
    auto f = state.range(0) == 0 ? worked_curve() : big_curve();
    for (auto _ : state) benchmark::DoNotOptimize(discriminant_points(f));
}
BENCHMARK(bm_discriminant)->Arg(0)->Arg(1);

void bm_loop_continuation(benchmark::State& state) {
    auto f = worked_curve();
    auto cfg = configure(discriminant_points(f).points, 1.0 / 2.1);
    auto maps = tree_maps(cfg, minimal_spanning_tree(cfg));
    auto loop = build_loop(cfg, maps, 1);
    auto yb = canonical_base_fiber(f, cfg.base).values;
    const int ng = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(continue_fiber(f, loop.segments, yb, ng));
}
BENCHMARK(bm_loop_continuation)->Arg(16)->Arg(64);

void bm_full_pipeline(benchmark::State& state) {
    auto f = worked_curve();
    for (auto _ : state) {
        auto cfg = configure(discriminant_points(f).points, 1.0 / 2.1);
        auto tree = minimal_spanning_tree(cfg);
        auto table = monodromy(f, cfg, build_initial_loops(cfg, tree), 32);
        auto gs = rearrange(table.columns, tree_string(cfg, tree).order);
        benchmark::DoNotOptimize(genus(gs.generators, gs.at_infinity));
    }
}
BENCHMARK(bm_full_pipeline);

void bm_loop_period(benchmark::State& state) {
    auto f = worked_curve();
    auto cfg = configure(discriminant_points(f).points, 1.0 / 2.1);
    auto maps = tree_maps(cfg, minimal_spanning_tree(cfg));
    auto loop = build_loop(cfg, maps, 1);
    auto yb = canonical_base_fiber(f, cfg.base).values;
    std::vector<std::vector<cplx>> num(4, std::vector<cplx>(1, cplx(0.0)));
    num[3][0] = 1.0;  // x^3
    DifferentialSpec spec{BivariatePolynomial(num)};
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_chain(f, spec, loop.segments, yb, 64));
}
BENCHMARK(bm_loop_period);

}  // namespace

BENCHMARK_MAIN();
