#include <benchmark/benchmark.h>

#include "feq/domain.hpp"
#include "feq/functions.hpp"
#include "feq/measures.hpp"
#include "feq/solvers.hpp"
#include "feq/verifier.hpp"

namespace {

using namespace feq;

Measure three_atoms(const GroupSpec& g) {
  return Measure(g, {{g.element({1}), Complex{1.0, 1.0}}, {g.element({2}), 0.5}, {g.zero(), Complex{0.0, -2.0}}});
}

void BM_EnumerateCharacters(benchmark::State& state) {
  const GroupSpec g(0, {state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_exponentials(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateCharacters)->RangeMultiplier(2)->Range(4, 256)->Complexity();

void BM_SolveFech(benchmark::State& state) {
  const GroupSpec g(0, {state.range(0)});
  const auto mu = three_atoms(g);
  for (auto _ : state) benchmark::DoNotOptimize(solve_fech(mu, FechFreeParams{}));
}
BENCHMARK(BM_SolveFech)->RangeMultiplier(2)->Range(4, 64);

void BM_ResidualSweepFinite(benchmark::State& state) {
  const GroupSpec g(0, {state.range(0)});
  const auto mu = three_atoms(g);
  const auto fam = solve_fech(mu, FechFreeParams{}).families.front();
  const Domain dom{g};
  for (auto _ : state) benchmark::DoNotOptimize(residual_fech(fam.f, fam.k, mu, dom));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ResidualSweepFinite)->RangeMultiplier(2)->Range(4, 64)->Complexity(benchmark::oNSquared);

void BM_ResidualSweepWindow(benchmark::State& state) {
  const auto g = GroupSpec::integers();
  const Measure mu(g, {{g.element({2}), 1.0}});
  const Exponential m0(g, {}, {-1.0});
  const auto a = AdditiveFunction(g, {Complex{2.0, -1.0}});
  const auto fam = solve_fech(mu, {m0}, FechFreeParams{1.0, 0.0, 1.0, a}).families.back();
  const Domain dom{g, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(residual_fech(fam.f, fam.k, mu, dom));
}
BENCHMARK(BM_ResidualSweepWindow)->Arg(5)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
