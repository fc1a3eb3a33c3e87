// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <map>
#include <memory>

#include "pgq/kernels.hpp"
#include "pgq/maps.hpp"
#include "pgq/rng.hpp"
#include "pgq/theorems.hpp"

using namespace pgq;
namespace k = pgq::kernels;

namespace {

const ProjSpace& space(int n, int q) {
  static std::map<std::pair<int, int>, std::unique_ptr<ProjSpace>> cache;
  auto& slot = cache[{n, q}];
  if (!slot) slot = std::make_unique<ProjSpace>(n, q);
  return *slot;
}

const int kSpaces[][2] = {{3, 3}, {4, 2}, {3, 4}, {4, 3}};

void space_args(benchmark::internal::Benchmark* b) {
  for (const auto& s : kSpaces) b->Args({s[0], s[1]});
}

template <bool Parallel>
void BM_LineAdjacency(benchmark::State& state) {
  const auto& sp = space(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto m = Parallel ? k::parallel::line_adjacency(sp) : k::serial::line_adjacency(sp);
    benchmark::DoNotOptimize(m);
  }
  state.counters["lines"] = sp.line_count();
}

// A collineation-induced map, so the scan cannot exit early.
template <bool Parallel>
void BM_PreservesIntersections(benchmark::State& state) {
  const auto& sp = space(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto image = generate_instance({1, InstanceKind::Collineation}, sp, sp).image;
  for (auto _ : state) {
    const bool ok = Parallel
                        ? k::parallel::preserves_relation(sp, sp, image, k::Relation::Intersecting)
                        : k::serial::preserves_relation(sp, sp, image, k::Relation::Intersecting);
    benchmark::DoNotOptimize(ok);
  }
}

template <bool Parallel>
void BM_PreservesNoncollinearity(benchmark::State& state) {
  const auto& sp = space(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  SplitMix64 rng(3);
  const auto c = random_collineation(rng, sp);
  const auto image = k::semilinear_point_images(sp, sp, c.matrix, c.auto_index);
  for (auto _ : state) {
    const bool ok = Parallel ? k::parallel::preserves_noncollinearity(sp, sp, image)
                             : k::serial::preserves_noncollinearity(sp, sp, image);
    benchmark::DoNotOptimize(ok);
  }
}

template <bool Parallel>
void BM_SemilinearLineImages(benchmark::State& state) {
  const auto& sp = space(3, 3);
  SplitMix64 rng(4);
  std::vector<Matrix> ms;
  for (int i = 0; i < state.range(0); ++i) ms.push_back(random_collineation(rng, sp).matrix);
  for (auto _ : state) {
    auto out = Parallel ? k::parallel::semilinear_line_images(sp, ms, 0)
                        : k::serial::semilinear_line_images(sp, ms, 0);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_LineAdjacency<false>)->Name("line_adjacency/serial")->Apply(space_args);
BENCHMARK(BM_LineAdjacency<true>)->Name("line_adjacency/parallel")->Apply(space_args);
BENCHMARK(BM_PreservesIntersections<false>)->Name("preserves_intersections/serial")->Apply(space_args);
BENCHMARK(BM_PreservesIntersections<true>)->Name("preserves_intersections/parallel")->Apply(space_args);
BENCHMARK(BM_PreservesNoncollinearity<false>)
    ->Name("preserves_noncollinearity/serial")
    ->Args({2, 3})
    ->Args({3, 2})
    ->Args({3, 3});
BENCHMARK(BM_PreservesNoncollinearity<true>)
    ->Name("preserves_noncollinearity/parallel")
    ->Args({2, 3})
    ->Args({3, 2})
    ->Args({3, 3});
BENCHMARK(BM_SemilinearLineImages<false>)->Name("semilinear_line_images/serial")->Arg(64)->Arg(1024);
BENCHMARK(BM_SemilinearLineImages<true>)->Name("semilinear_line_images/parallel")->Arg(64)->Arg(1024);

BENCHMARK_MAIN();
