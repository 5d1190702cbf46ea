#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fwsubmix/objective.hpp"
#include "fwsubmix/region.hpp"

namespace fwsubmix {

/// An objective together with the region it is maximized over.
class ProblemInstance {
 public:
  ProblemInstance(ObjectivePair objective, FeasibleRegion region);

  const ObjectivePair& objective() const noexcept { return objective_; }
  const FeasibleRegion& region() const noexcept { return region_; }
  std::size_t dimension() const noexcept { return region_.dimension(); }

 private:
  ObjectivePair objective_;
  FeasibleRegion region_;
};

/// Trajectory and accounting for one solver run.
///
/// `iterates[0]` is the starting point. `output` is what the algorithm
/// returns (the last iterate for the greedy variants and the baselines, the
/// best iterate for the best-of-trajectory variants); `best` is always the
/// first iterate attaining max(values).
struct SolverReport {
  std::string solver;
  std::vector<Point> iterates;
  std::vector<double> values;
  Point output;
  double output_value = 0.0;
  Point best;
  double best_value = 0.0;
  OracleCounters calls;
  double elapsed_seconds = 0.0;

  double epsilon = 0.0;  // quality parameter after normalization (0 if unused)
  double step = 0.0;     // step size actually used
  int iterations = 0;    // number of update steps performed
  double eta = 0.0;      // certified initializer gap (gradient-combining only)
  bool translated = false;  // run in a shifted frame with the lower corner at 0
};

}  // namespace fwsubmix
