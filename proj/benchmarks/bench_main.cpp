#include <benchmark/benchmark.h>

#include "hopf/catalog.hpp"
#include "hopf/identity.hpp"
#include "hopf/verification.hpp"

using namespace hopf;

static void BM_CyclotomicMultiply(benchmark::State& state) {
  const FieldSpec f = FieldSpec::cyclotomic(static_cast<unsigned>(state.range(0)));
  const Scalar a = Scalar::parse(f, "3/7*z - 2");
  const Scalar b = Scalar::parse(f, "-z^2 + 5/3");
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(3)->Arg(4)->Arg(8);

static void BM_Invert(benchmark::State& state) {
  const ValidatedAlgebra h(build_taft(static_cast<unsigned>(state.range(0))));
  const Matrix& s = h->antipode();
  for (auto _ : state) benchmark::DoNotOptimize(invert(s));
}
BENCHMARK(BM_Invert)->Arg(3)->Arg(4);

static void BM_Validate(benchmark::State& state) {
  const HopfAlgebra h = build_taft(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate(h));
}
BENCHMARK(BM_Validate)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ModularData(benchmark::State& state) {
  const ValidatedAlgebra h(build_taft(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(compute_modular_data(h));
}
BENCHMARK(BM_ModularData)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_PairedSystem(benchmark::State& state) {
  const HopfAlgebra h = build_taft(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(PairedSystem::build(h));
}
BENCHMARK(BM_PairedSystem)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Radford(benchmark::State& state) {
  const PairedSystem sys = PairedSystem::build(build_taft(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(check_radford(sys));
}
BENCHMARK(BM_Radford)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_FullReport(benchmark::State& state) {
  const PairedSystem sys = PairedSystem::build(build_taft(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(full_report(sys));
}
BENCHMARK(BM_FullReport)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Corpus(benchmark::State& state) {
  const auto corpus = read_corpus_dir(HOPFKIT_CORPUS_DIR);
  const PairedSystem sys = PairedSystem::build(build_taft(3));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_corpus(corpus, sys));
}
BENCHMARK(BM_Corpus)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
