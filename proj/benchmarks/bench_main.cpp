#include "tca/dfinite.hpp"
#include "tca/grassmann.hpp"
#include "tca/series_forms.hpp"
#include "tca/torus.hpp"

#include <benchmark/benchmark.h>

using namespace tca;

namespace {

CoeffSeries catalan_ogf(int length) {
    CoeffSeries out;
    const LaurentPoly e = LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 1);
    for (const auto& x : invariant_dimensions(parse_group("sl2"), e, length - 1)) out.emplace_back(x);
    return out;
}

void BM_SchurMultiply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SymFunc a(Basis::schur, 2 * n), b(Basis::schur, 2 * n);
    for (const auto& lam : enumerate_partitions(n)) {
        a.add_term(lam, 1);
        b.add_term(lam, 1);
    }
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SchurMultiply)->DenseRange(3, 6);

void BM_SigmaRecognize(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int r = 2;
    const SymFunc f = sigma_expand(detring_formal_character(d, r), r * (d - r) + r + 5);
    for (auto _ : state) benchmark::DoNotOptimize(sigma_recognize(f, {r, 0, r * (d - r)}));
}
BENCHMARK(BM_SigmaRecognize)->DenseRange(3, 5);

void BM_DetringKostka(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(detring_formal_character(d, 2));
}
BENCHMARK(BM_DetringKostka)->DenseRange(3, 6);

void BM_Gessel(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gessel_enhanced(4, 2, N));
}
BENCHMARK(BM_Gessel)->DenseRange(4, 7);

void BM_InvariantDimensions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(catalan_ogf(n));
}
BENCHMARK(BM_InvariantDimensions)->RangeMultiplier(2)->Range(16, 128);

void BM_GuessOdeCatalanSquared(benchmark::State& state) {
    const CoeffSeries c = catalan_ogf(80);
    const CoeffSeries sq = hadamard(c, c);
    for (auto _ : state) benchmark::DoNotOptimize(guess_ode(sq, 4, 8));
}
BENCHMARK(BM_GuessOdeCatalanSquared)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
