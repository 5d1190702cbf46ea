#include <benchmark/benchmark.h>

#include "fwsubmix/generators.hpp"
#include "fwsubmix/objectives.hpp"

namespace {

using namespace fwsubmix;

// Softmax gradient on the interpolation grid; dominated by one n x n solve.
void BM_SoftmaxGradient(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const SoftmaxExtension g(make_gaussian_kernel(grid_points(side), 0.04));
  const Vector x = Vector::Constant(static_cast<Eigen::Index>(side * side), 0.0625);
  for (auto _ : state) benchmark::DoNotOptimize(g.gradient(x));
}
BENCHMARK(BM_SoftmaxGradient)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_QuadraticGradient(benchmark::State& state) {
  const QpInstance q = make_qp_instance(64, 32, 0);
  const Vector x = Vector::Constant(64, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(q.g->gradient(x));
}
BENCHMARK(BM_QuadraticGradient);

}  // namespace
