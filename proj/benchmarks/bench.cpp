#include <benchmark/benchmark.h>

#include "eulerop/expr.hpp"
#include "eulerop/families.hpp"
#include "eulerop/manybody.hpp"
#include "eulerop/spectra.hpp"

using namespace eulerop;

namespace {

void BM_HermiteGenerate(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(families::generate(families::Family::Hermite, n));
  }
}
BENCHMARK(BM_HermiteGenerate)->Arg(10)->Arg(30)->Arg(60);

// rational-function coefficients throughout
void BM_LaguerreSymbolic(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(families::verify_de(families::Family::Laguerre, n));
  }
}
BENCHMARK(BM_LaguerreSymbolic)->Arg(5)->Arg(15);

void BM_BuildLadder(benchmark::State& state) {
  const auto kind = static_cast<families::LadderKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(families::build_ladder(kind));
  state.SetLabel(std::string(families::name(kind)));
}
BENCHMARK(BM_BuildLadder)->DenseRange(0, 8);

void BM_Conjugate(benchmark::State& state) {
  const DiffOp a = DiffOp::d(2) * RatFun(Rational(-1, 4));
  const DiffOp b = DiffOp::x(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(conjugate(a, b));
}
BENCHMARK(BM_Conjugate)->Arg(1)->Arg(4)->Arg(8);

void BM_HarmonicSeries(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectra::harmonic_quantization_check(state.range(0)));
  }
}
BENCHMARK(BM_HarmonicSeries)->Arg(10)->Arg(40);

void BM_QES(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(spectra::qes_sextic(n, Rational(1), n + 12));
}
BENCHMARK(BM_QES)->Arg(4)->Arg(8)->Arg(12);

void BM_Jack(benchmark::State& state) {
  const RatFun beta = RatFun::parameter("beta");
  const auto parts = manybody::partitions(state.range(0), 3);
  for (auto _ : state) {
    for (const auto& p : parts) benchmark::DoNotOptimize(manybody::jack(p, beta, 3));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(parts.size()));
}
BENCHMARK(BM_Jack)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ParseOperator(benchmark::State& state) {
  const ParamSet ps{"alpha", "l"};
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_operator("x/4 - x*d + x*d^2 + 2*d - l*(l+1)/x - 1", ps));
  }
}
BENCHMARK(BM_ParseOperator);

}  // namespace

BENCHMARK_MAIN();
