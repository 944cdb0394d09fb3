#include <benchmark/benchmark.h>

#include "cycloknot/ado.hpp"
#include "cycloknot/habiro.hpp"
#include "cycloknot/jones.hpp"
#include "cycloknot/qtools.hpp"
#include "cycloknot/wrt_cgp.hpp"

using namespace cycloknot;

static void BM_HabiroCoefficient(benchmark::State& state) {
  const KnotSpec k = KnotSpec::double_twist(2, -2);
  for (auto _ : state) benchmark::DoNotOptimize(habiro_a_enumerated(k, state.range(0), ChainOrder::Lexicographic));
}
BENCHMARK(BM_HabiroCoefficient)->DenseRange(4, 12, 4);

static void BM_ColoredJonesHyper(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(colored_jones_hyper_t2(2, state.range(0)));
}
BENCHMARK(BM_ColoredJonesHyper)->Arg(8)->Arg(16);

static void BM_InversionOracle(benchmark::State& state) {
  const KnotSpec k = KnotSpec::double_twist(2, 1);
  std::vector<IntPoly> evals;
  for (std::int64_t l = 1; l <= state.range(0) + 1; ++l) evals.push_back(colored_jones(k, l));
  for (auto _ : state) benchmark::DoNotOptimize(habiro_from_jones(evals, state.range(0)));
}
BENCHMARK(BM_InversionOracle)->Arg(4)->Arg(6);

static void BM_QBinomialLucas(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(qbinomial_at_root_direct(3 * p + 2, p + 1, p));
}
BENCHMARK(BM_QBinomialLucas)->Arg(5)->Arg(7);

static void BM_AdoTorus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ado_torus_multisum(2, state.range(0)));
}
BENCHMARK(BM_AdoTorus)->Arg(3)->Arg(5);

static void BM_ConjecturalAdo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ado_conjectural(2, 5, state.range(0)));
}
BENCHMARK(BM_ConjecturalAdo)->Arg(3)->Arg(5);

static void BM_WrtDirect(benchmark::State& state) {
  const KnotSpec k = KnotSpec::double_twist(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(wrt_zero(k, state.range(0)));
}
BENCHMARK(BM_WrtDirect)->Arg(5)->Arg(7);

static void BM_CgpFromAdo(benchmark::State& state) {
  const KnotSpec k = KnotSpec::double_twist(2, -2);
  for (auto _ : state) benchmark::DoNotOptimize(cgp_from_ado(k, state.range(0)));
}
BENCHMARK(BM_CgpFromAdo)->Arg(5)->Arg(7);
BENCHMARK_MAIN();
