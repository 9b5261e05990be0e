#include "collar/catalog.hpp"
#include "collar/condition.hpp"
#include "collar/curvature.hpp"
#include "collar/octonion.hpp"
#include "collar/triple.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace collar;

namespace {

const char* const kEntries[] = {"g2-so0-7-so8p", "su3-su4-spin7", "sp2-su4-su5", "spin7-so8-so9p", "spin-octonion-case1"};

void BM_G2Kernel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(derivation_algebra().dim());
}
BENCHMARK(BM_G2Kernel)->Unit(benchmark::kMillisecond);

void BM_Bracket(benchmark::State& state) {
  std::mt19937_64 rng(0);
  std::normal_distribution<double> g;
  const int n = static_cast<int>(state.range(0));
  Matrix a(n, n), b(n, n);
  for (int i = 0; i < n * n; ++i) {
    a.data()[i] = g(rng);
    b.data()[i] = g(rng);
  }
  const Element x(a - a.transpose()), y(b - b.transpose());
  for (auto _ : state) benchmark::DoNotOptimize(bracket(x, y));
}
BENCHMARK(BM_Bracket)->Arg(8)->Arg(14)->Arg(20);

void BM_Decompose(benchmark::State& state) {
  const Triple t = build(kEntries[state.range(0)], 0);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(t).m1.dim());
  state.SetLabel(kEntries[state.range(0)]);
}
BENCHMARK(BM_Decompose)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_CertifyBracket(benchmark::State& state) {
  const Decomposition d = decompose(build(kEntries[state.range(0)], 0));
  for (auto _ : state) benchmark::DoNotOptimize(certify_bracket_intersection(d).kind);
  state.SetLabel(kEntries[state.range(0)]);
}
BENCHMARK(BM_CertifyBracket)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_EstimateInfRho(benchmark::State& state) {
  const Decomposition d = decompose(build("su3-su4-spin7", 0));
  EstimateOptions o;
  o.restarts = static_cast<int>(state.range(0));
  long evals = 0;
  for (auto _ : state) evals += estimate_inf_rho(d, o).evaluations;
  state.counters["evals/iter"] = benchmark::Counter(static_cast<double>(evals), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_EstimateInfRho)->Arg(1)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_VerifyWitness(benchmark::State& state) {
  const Witness w = builtin_witness("spin-octonion-case4", 3);
  const Decomposition d = decompose(w.triple);
  for (auto _ : state) benchmark::DoNotOptimize(verify_witness(d, w.x, w.y).kind);
}
BENCHMARK(BM_VerifyWitness);

void BM_G2Sequence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(g2_sequence_verdict({1, 2, 4, 8, 16}).kind);
}
BENCHMARK(BM_G2Sequence)->Unit(benchmark::kMicrosecond);

void BM_LemmaCheck(benchmark::State& state) {
  const Decomposition d = decompose(build("g2-so0-7-so8p", 0));
  const Subspace dom = sum(d.m_eff(), d.s);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  Vector c(dom.dim()), e(dom.dim());
  for (int i = 0; i < dom.dim(); ++i) {
    c(i) = g(rng);
    e(i) = g(rng);
  }
  const Element x = dom.combine(c), y = dom.combine(e);
  const PhiMap phi(d, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(check_lemma_bound(phi, x, y));
}
BENCHMARK(BM_LemmaCheck);

}  // namespace

BENCHMARK_MAIN();
