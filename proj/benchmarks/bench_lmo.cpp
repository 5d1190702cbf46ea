#include <benchmark/benchmark.h>

#include "fwsubmix/generators.hpp"
#include "fwsubmix/region.hpp"
#include "fwsubmix/rng.hpp"

namespace {

using namespace fwsubmix;

Vector direction(std::size_t n, std::uint64_t seed) {
  CounterRng rng(seed, 0);
  Vector c(static_cast<Eigen::Index>(n));
  for (auto& v : c) v = rng.uniform(-1.0, 1.0);
  return c;
}

void BM_PolytopeLmo(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QpInstance q = make_qp_instance(n, n / 2, 1);
  const Vector c = direction(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lmo(q.region, c));
}
BENCHMARK(BM_PolytopeLmo)->Arg(8)->Arg(32)->Arg(64);

void BM_CardinalityLmo(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FeasibleRegion r = FeasibleRegion::cardinality(n, 25.0);
  const Vector c = direction(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(lmo(r, c));
}
BENCHMARK(BM_CardinalityLmo)->Arg(100)->Arg(400);

void BM_CardinalityProjection(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FeasibleRegion r = FeasibleRegion::cardinality(n, 25.0);
  const Vector x = direction(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(project(r, x));
}
BENCHMARK(BM_CardinalityProjection)->Arg(100)->Arg(400);

}  // namespace
