#include <benchmark/benchmark.h>

#include "fwsubmix/generators.hpp"
#include "fwsubmix/solvers.hpp"

namespace {

using namespace fwsubmix;

void run(benchmark::State& state, SolverKind kind) {
  const ProblemInstance p = make_qp_instance(8, 4, 0).problem();
  SolverConfig cfg;
  cfg.check_preconditions = false;
  cfg.epsilon = 0.1;
  for (auto _ : state) benchmark::DoNotOptimize(run_solver(kind, p, cfg).output_value);
}

void BM_Greedy(benchmark::State& s) { run(s, SolverKind::greedy); }
void BM_MeasuredGreedy(benchmark::State& s) { run(s, SolverKind::measured_greedy); }
void BM_GradientCombining(benchmark::State& s) { run(s, SolverKind::gradient_combining); }
void BM_NonOblivious(benchmark::State& s) { run(s, SolverKind::non_oblivious); }
void BM_StandardFw(benchmark::State& s) { run(s, SolverKind::standard_fw); }

BENCHMARK(BM_Greedy);
BENCHMARK(BM_MeasuredGreedy);
BENCHMARK(BM_GradientCombining)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NonOblivious)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StandardFw);

}  // namespace
