#include <benchmark/benchmark.h>

#include "chromhess/cancellation.hpp"
#include "chromhess/chromatic.hpp"
#include "chromhess/gkm.hpp"

using namespace chromhess;

namespace {

void BM_QuasiShuffle(benchmark::State& state) {
  const QSymElement a = QSymElement::monomial({1, 2, 1});
  const QSymElement b = QSymElement::monomial({2, 1, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_QuasiShuffle);

void BM_CsfBruteforce(benchmark::State& state) {
  const auto hs = enumerate_hessenberg(static_cast<int>(state.range(0)));
  const OrderedGraph g = graph_of(hs[hs.size() / 2]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(csf_bruteforce(g, ColouringWeight::ProperStrict));
  }
}
BENCHMARK(BM_CsfBruteforce)->Arg(4)->Arg(5);

void BM_InducedQsym(benchmark::State& state) {
  const OrderedGraph g =
      graph_of(HessenbergFunction::complete(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(induced_qsym(g, GraphCharacter::q_per_edge()));
  }
}
BENCHMARK(BM_InducedQsym)->Arg(4)->Arg(5);

void BM_FlowUpBasis(benchmark::State& state) {
  const MomentGraph m(HessenbergFunction::complete(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(FlowUpBasis(m));
  }
}
BENCHMARK(BM_FlowUpBasis)->Arg(3)->Arg(4);

void BM_Frobenius(benchmark::State& state) {
  const HessenbergFunction h =
      HessenbergFunction::complete(static_cast<int>(state.range(0)));
  const MomentGraph m(h);
  const FlowUpBasis basis(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(frobenius(basis, VarFamily::L, 1));
    benchmark::DoNotOptimize(frobenius(basis, VarFamily::R, 1));
  }
}
BENCHMARK(BM_Frobenius)->Arg(3)->Arg(4);

void BM_AlternatingSum(benchmark::State& state) {
  const OrderedGraph g =
      graph_of(HessenbergFunction::complete(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(alternating_sum(g));
  }
}
BENCHMARK(BM_AlternatingSum)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
