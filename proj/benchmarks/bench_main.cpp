#include <benchmark/benchmark.h>

#include "wreathstat/wreathstat.hpp"

using namespace wreathstat;

static void BM_EnumerateGroup(benchmark::State& state) {
  GroupSpec spec(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_element(spec, [&](const ColoredPermutation&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(*spec.order()));
}
BENCHMARK(BM_EnumerateGroup)->Args({2, 5})->Args({3, 4})->Args({4, 4});

static void BM_NegativeStatistics(benchmark::State& state) {
  GroupSpec spec(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  auto group = enumerate_group(spec);
  for (auto _ : state) {
    long total = 0;
    for (const auto& g : group) total += nmajor(g) + ndes(g);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(group.size()));
}
BENCHMARK(BM_NegativeStatistics)->Args({2, 4})->Args({3, 4});

static void BM_FlagStatistics(benchmark::State& state) {
  auto group = enumerate_group(GroupSpec(3, 4));
  for (auto _ : state) {
    long total = 0;
    for (const auto& g : group) total += fmajor(g) + fdes(g);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(group.size()));
}
BENCHMARK(BM_FlagStatistics);

static void BM_Bijection(benchmark::State& state) {
  auto group = enumerate_group(GroupSpec(3, 4));
  for (auto _ : state)
    for (const auto& g : group) benchmark::DoNotOptimize(neg_flag_bijection(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(group.size()));
}
BENCHMARK(BM_Bijection);

static void BM_VerifyIdentity(benchmark::State& state) {
  auto id = static_cast<IdentityId>(state.range(0));
  GroupSpec spec(static_cast<int>(state.range(1)), static_cast<int>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(verify(id, spec, 3).match);
  state.SetLabel(std::string(to_string(id)));
}
BENCHMARK(BM_VerifyIdentity)
    ->Args({static_cast<int>(IdentityId::wreathNeg), 3, 3})
    ->Args({static_cast<int>(IdentityId::wreathFlagMulti), 2, 4})
    ->Args({static_cast<int>(IdentityId::bNaturalMulti), 2, 3})
    ->Args({static_cast<int>(IdentityId::dNegMulti), 2, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_FppPoints(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  std::vector<int> pi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pi[static_cast<std::size_t>(i)] = n - i;
  auto cone = cone_over(HalfOpenSimplex::unsigned_simplex(pi, 1), wreath_scaling(n, r));
  auto method = state.range(2) ? ShiftMethod::whole : ShiftMethod::offBoundary;
  for (auto _ : state) benchmark::DoNotOptimize(fpp_points(cone, method));
  state.SetLabel(method == ShiftMethod::whole ? "whole" : "offBoundary");
}
BENCHMARK(BM_FppPoints)->Args({4, 3, 1})->Args({4, 3, 0})->Args({6, 4, 1})->Unit(benchmark::kMillisecond);

static void BM_FppPointsGeneral(benchmark::State& state) {
  SimplicialCone cone({{1, 0, 0, 0}, {1, 2, 0, 0}, {1, 1, 3, 0}, {1, 1, 1, 5}}, {1, 2, 2, 3}, {true, false, true, false});
  for (auto _ : state) benchmark::DoNotOptimize(fpp_points(cone, ShiftMethod::whole));
}
BENCHMARK(BM_FppPointsGeneral);

static void BM_Expand(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int K = static_cast<int>(state.range(1));
  std::vector<int> pi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pi[static_cast<std::size_t>(i)] = i + 1;
  auto rational = sigma_rational(cone_over(HalfOpenSimplex::unsigned_simplex(pi, 1), wreath_scaling(n, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(expand(rational, K));
}
BENCHMARK(BM_Expand)->Args({3, 4})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_Distribution(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(distribution(GroupSpec(2, 5), StatPair::ndesNmajor));
}
BENCHMARK(BM_Distribution)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
