#include <benchmark/benchmark.h>

#include "padyn/padyn.hpp"

using namespace padyn;

namespace {

void BM_HenselLift(benchmark::State& state) {
  const IntPoly f{-2, 0, 1};
  const Prime p(7);
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hensel_lift(f, 3, k, p).value());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HenselLift)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_RootsModP(benchmark::State& state) {
  const Prime p(static_cast<std::uint64_t>(state.range(0)));
  const IntPoly f = IntPoly::monomial(1, 40) + IntPoly{3, -5, 0, 7};
  for (auto _ : state) benchmark::DoNotOptimize(roots_mod_p(f, 0, p).roots.size());
}
BENCHMARK(BM_RootsModP)->Arg(101)->Arg(10'007)->Arg(1'000'003);

void BM_FermatReduce(benchmark::State& state) {
  const Prime p(13);
  const IntPoly f = IntPoly{1, 1}.pow(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fermat_reduce(f, p).degree());
}
BENCHMARK(BM_FermatReduce)->Arg(64)->Arg(512);

void BM_BackwardTree(benchmark::State& state) {
  const IntPoly f = IntPoly::monomial(1, 2);
  const Prime p(5);
  const auto depth = static_cast<unsigned>(state.range(0));
  std::size_t nodes = 0;
  for (auto _ : state) {
    const BackwardTree tree = backward_tree(f, 1, p, 8, depth);
    nodes = tree.nodes().size();
    benchmark::DoNotOptimize(nodes);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_BackwardTree)->DenseRange(4, 12, 4);

void BM_BruteForceOracle(benchmark::State& state) {
  const IntPoly f{2, -7, 1};
  const Integer m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_congruence_bruteforce(f, 0, m).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BruteForceOracle)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
