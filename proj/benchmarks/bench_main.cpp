#include <benchmark/benchmark.h>

#include "clusterweave/braid.hpp"
#include "clusterweave/exchange_graph.hpp"
#include "clusterweave/ngraph.hpp"
#include "clusterweave/seed.hpp"

using namespace cw;

namespace {

Seed affine_d4() { return Seed::initial(bipartite_matrix(parse_dynkin("D~4"))); }

void BM_MutateSeed(benchmark::State& state) {
  const Seed s = mutate_seed_sequence(affine_d4(), {0, 1, 2, 3});
  int k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mutate_seed(s, k));
    k = (k + 1) % s.n();
  }
}
BENCHMARK(BM_MutateSeed);

void BM_CanonicalForm(benchmark::State& state) {
  const Seed s = coxeter_mutation(affine_d4(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(s));
}
BENCHMARK(BM_CanonicalForm);

void BM_ExploreAffineD4(benchmark::State& state) {
  const Seed s = affine_d4();
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(explore(s, ExploreOptions{4, 100000, jobs, false}));
}
BENCHMARK(BM_ExploreAffineD4)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EquivalentBounded(benchmark::State& state) {
  const BraidWord a = beta_hat_affine_d(4), b = ngraph_word_affine_d(4);
  for (auto _ : state) benchmark::DoNotOptimize(equivalent_bounded(a, b, 1000000, true));
}
BENCHMARK(BM_EquivalentBounded)->Unit(benchmark::kMillisecond);

void BM_LegendrianCoxeter(benchmark::State& state) {
  const CoxeterIterate start = coxeter_start({CatalogShape::Family::AffineD, 4});
  for (auto _ : state) benchmark::DoNotOptimize(legendrian_coxeter_mutation(start, 1));
}
BENCHMARK(BM_LegendrianCoxeter)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
