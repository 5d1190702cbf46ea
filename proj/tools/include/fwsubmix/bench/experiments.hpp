#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fwsubmix/bench/config.hpp"
#include "fwsubmix/bench/output.hpp"
#include "fwsubmix/errors.hpp"
#include "fwsubmix/problem.hpp"
#include "fwsubmix/solvers.hpp"

namespace fwsubmix::bench {

/// A solver raised during an experiment run. Carries the solver and the
/// underlying message.
class SolverFailure : public Error {
 public:
  using Error::Error;
};

/// Per-solver aggregate over all seeds of one experiment.
struct SolverSeries {
  SolverKind solver{};
  /// False when the solver cannot run on the region (PGA on a polytope).
  bool available = true;
  std::string unavailable_reason;
  /// Row r is the mean over seeds of F after r + 1 updates. Best-of
  /// trajectory solvers are flattened to their mean final output.
  std::vector<std::optional<double>> rows;
  double mean_final = 0.0;
  /// One report per seed, in seed order.
  std::vector<SolverReport> reports;
};

struct ExperimentOutcome {
  /// File stem for the outputs, e.g. qp_n8_m4.
  std::string label;
  std::size_t row_count = 0;
  std::vector<SolverSeries> series;

  // Interpolation only.
  std::optional<Vector> solution;
  double similarity_score = 0.0;
  std::size_t grid_side = 0;

  std::vector<Series> table() const;
  const SolverSeries* find(SolverKind kind) const;
};

/// SolverConfig used for every experiment run: preconditions off, the given
/// iteration budget and step, starts at interior_point(region) for the
/// solvers that accept a start. Non-oblivious FW takes eps from
/// nonoblivious_epsilon_for_iterations(iterations) as both step and
/// surrogate eps.
SolverConfig experiment_solver_config(SolverKind kind, const FeasibleRegion& region,
                                      int iterations, double step);

/// Runs `count` jobs on up to `workers` threads (0 = hardware concurrency).
/// Exceptions are rethrown after all jobs finish, lowest index first.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& job);

ExperimentOutcome run_qp_experiment(const ExperimentConfig& cfg);

/// `design_override` replaces the seeded Gaussian design (test hook; the
/// `design = identity` config key uses it with the identity matrix).
ExperimentOutcome run_doptimal_experiment(const ExperimentConfig& cfg,
                                          const std::optional<Matrix>& design_override = {});

/// Gradient-combining FW from (budget / n) * 1 on the Gaussian-kernel grid.
ExperimentOutcome run_interpolation_experiment(const ExperimentConfig& cfg);

/// One outcome per instance file.
std::vector<ExperimentOutcome> run_custom(const ExperimentConfig& cfg);

std::vector<ExperimentOutcome> run_experiment(const ExperimentConfig& cfg);

/// Writes <label>.csv (and for interpolation <label>_solution.csv and
/// <label>.svg) under cfg.output_dir; returns the paths written.
std::vector<std::filesystem::path> write_outputs(const ExperimentConfig& cfg,
                                                 const ExperimentOutcome& outcome);

/// x^T L x
double similarity_score(const Matrix& kernel, const Vector& x);

}  // namespace fwsubmix::bench
