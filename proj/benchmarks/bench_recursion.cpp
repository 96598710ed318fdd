#include <benchmark/benchmark.h>

#include "qcurve/closed_forms.hpp"
#include "qcurve/free_energy.hpp"
#include "qcurve/quantize.hpp"

using namespace qcurve;

namespace {

CurveGeometry gauss() { return analyze_geometry(build_curve("gauss", std::vector<Rational>{3, 1, 1})); }

// Fresh table each iteration so memoization does not hide the work.
void BM_RecursionWg1(benchmark::State& state) {
  CurveGeometry g = gauss();
  for (auto _ : state) {
    RecursionTable t(g, 1);
    benchmark::DoNotOptimize(t.w(static_cast<int>(state.range(0)), 1));
  }
}
BENCHMARK(BM_RecursionWg1)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_RecursionW0n(benchmark::State& state) {
  CurveGeometry g = gauss();
  for (auto _ : state) {
    RecursionTable t(g, 1);
    benchmark::DoNotOptimize(t.w(0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_RecursionW0n)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_FreeEnergy(benchmark::State& state) {
  CurveGeometry g = analyze_geometry(build_curve("bessel", std::vector<Rational>{1}));
  for (auto _ : state) {
    RecursionTable t(g, 1);
    benchmark::DoNotOptimize(free_energy(t, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_FreeEnergy)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_VorosFromW(benchmark::State& state) {
  CurveGeometry g = analyze_geometry(build_curve("weber", std::vector<Rational>{1}));
  QuantizationDivisor d = QuantizationDivisor::canonical(g, {{"inf", Rational(1, 3)}});
  for (auto _ : state) {
    RecursionTable t(g, 1);
    benchmark::DoNotOptimize(voros_from_w(t, d, "inf", static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_VorosFromW)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_VorosRiccati(benchmark::State& state) {
  CurveGeometry g = analyze_geometry(build_curve("weber", std::vector<Rational>{1}));
  QuantizationDivisor d = QuantizationDivisor::canonical(g, {{"inf", Rational(1, 3)}});
  QuantumCurve q = quantize(g, d);
  for (auto _ : state) {
    int m = static_cast<int>(state.range(0));
    benchmark::DoNotOptimize(voros_riccati(riccati_expand(q, g, m), g, "inf", m));
  }
}
BENCHMARK(BM_VorosRiccati)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RelationCheck(benchmark::State& state) {
  ParameterPoint lambda = gauss().curve.parameters;
  NuPoint nu{{"0", Rational(1, 3)}, {"1", 0}, {"inf", Rational(1, 5)}};
  for (auto _ : state) benchmark::DoNotOptimize(check_voros_relation("gauss", "0", lambda, nu, 8));
}
BENCHMARK(BM_RelationCheck)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
