#include <benchmark/benchmark.h>

#include "zeroflip/bounds.hpp"
#include "zeroflip/exp_moment.hpp"
#include "zeroflip/harness.hpp"

using namespace zeroflip;

namespace {

PWFunction make_f(int zeros) {
    Rng rng(42);
    return draw_function(rng, zeros);
}

void bm_exp_moment(benchmark::State& state) {
    const Poly p({Complex(1.0), Complex(-0.4, 0.1), Complex(0.2), Complex(0.05, 0.3)});
    const Complex w(double(state.range(0)), 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(exp_moment(p, -1.0, 1.0, w));
}
BENCHMARK(bm_exp_moment)->Arg(0)->Arg(1)->Arg(10)->Arg(100);

void bm_inner_product(benchmark::State& state) {
    const PWFunction f = make_f(static_cast<int>(state.range(0)));
    const auto& F = f.spectrum();
    for (auto _ : state) benchmark::DoNotOptimize(inner_product(F, F));
}
BENCHMARK(bm_inner_product)->Arg(0)->Arg(2);

void bm_flip_spectrum(benchmark::State& state) {
    const PWFunction f = make_f(static_cast<int>(state.range(0)));
    const FlipPoint a(0.6, 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(flip_spectrum(f, a).norm_sq());
}
BENCHMARK(bm_flip_spectrum)->Arg(0)->Arg(2);

void bm_self_distance(benchmark::State& state) {
    const PWFunction f = make_f(2);
    const FlipPoint a(0.6, 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(self_distance(f, a).distance_sq);
}
BENCHMARK(bm_self_distance);

void bm_pair_distance(benchmark::State& state) {
    const PWFunction f = make_f(2);
    const FlipPoint a(0.6, 0.4), b(0.55, 0.45);
    for (auto _ : state) benchmark::DoNotOptimize(pair_distance(f, a, b).distance_sq);
}
BENCHMARK(bm_pair_distance);

void bm_omega2(benchmark::State& state) {
    const PWFunction f = make_f(2);
    for (auto _ : state) benchmark::DoNotOptimize(omega2(f.spectrum(), 0.4));
}
BENCHMARK(bm_omega2);

void bm_time_oracle(benchmark::State& state) {
    const PWFunction f = make_f(1);
    const FlipPoint a(0.6, 0.4), b(0.55, 0.45);
    for (auto _ : state) benchmark::DoNotOptimize(time_oracle_inner(f, a, b, 1e-7));
}
BENCHMARK(bm_time_oracle);

}  // namespace

BENCHMARK_MAIN();
