#include <benchmark/benchmark.h>

#include "pgrouplab/hom.hpp"
#include "pgrouplab/inertia.hpp"
#include "pgrouplab/invariance.hpp"
#include "pgrouplab/rng.hpp"
#include "pgrouplab/subgroup.hpp"

namespace {

using namespace pgrouplab;

void BM_span(benchmark::State& state) {
  const GroupShape g(2, {1, 1, 2, 2});
  const std::vector<Element> gens = {Element(g, {1, 0, 2, 1}), Element(g, {0, 1, 1, 3}),
                                     Element(g, {1, 1, 0, 2})};
  for (auto _ : state) benchmark::DoNotOptimize(Subgroup::span(g, gens));
}
BENCHMARK(BM_span);

void BM_enumerate_subgroups(benchmark::State& state) {
  const GroupShape g(2, {1, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subgroups(g));
}
BENCHMARK(BM_enumerate_subgroups);

void BM_hat(benchmark::State& state) {
  const GroupShape g(2, {1, 1, 2, 2});
  const Subgroup x = Subgroup::span(g, {Element(g, {1, 0, 2, 0}), Element(g, {0, 1, 0, 1})});
  Rng rng(5);
  const Homomorphism f = random_endo(g, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hat(f, x));
}
BENCHMARK(BM_hat);

void BM_classify(benchmark::State& state) {
  const GroupShape g(2, {1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_classify);

void BM_two_auto_decompose(benchmark::State& state) {
  const GroupShape g(3, {1, 1, 2});
  Rng rng(7);
  const Homomorphism f = random_endo(g, rng);
  for (auto _ : state) benchmark::DoNotOptimize(two_auto_decompose(f));
}
BENCHMARK(BM_two_auto_decompose);

void BM_inertia_profile_exhaustive(benchmark::State& state) {
  const GroupShape g(2, {1, 3});
  const Subgroup x = Subgroup::span(g, {Element(g, {1, 2})});
  for (auto _ : state)
    benchmark::DoNotOptimize(
        inertia_profile(x, MapFamily::endomorphisms, ProfileStrategy::exhaustive()));
}
BENCHMARK(BM_inertia_profile_exhaustive);

}  // namespace

BENCHMARK_MAIN();
