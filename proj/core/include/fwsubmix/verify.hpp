#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "fwsubmix/objective.hpp"
#include "fwsubmix/problem.hpp"
#include "fwsubmix/region.hpp"
#include "fwsubmix/rng.hpp"
#include "fwsubmix/tolerances.hpp"

namespace fwsubmix {

using ScalarField = std::function<double(const Vector&)>;
using GradientField = std::function<Vector(const Vector&)>;

/// Central differences (f(x + h e_i) - f(x - h e_i)) / 2h. When a stencil
/// point is outside f's domain (DomainError) h is shrunk 10x once; a second
/// failure propagates.
Vector finite_diff_grad(const ScalarField& f, const Vector& x, double h = 1e-5);
Vector finite_diff_grad(const DifferentiableFunction& f, const Vector& x, double h = 1e-5);

/// ||a - b||_2 / max(1, ||a||_2, ||b||_2).
double relative_error(const Vector& a, const Vector& b);

struct PropertyReport {
  bool passed = false;
  double max_violation = 0.0;
  int trials = 0;
};

/// Uniform point of a box or cardinality region; polytope samples are drawn
/// in [0,u] and pulled toward 0 until Ax <= b holds.
Vector sample_feasible(const FeasibleRegion& region, CounterRng& rng);

/// Samples pairs a <= b in `domain` (drawn with sample_feasible, then b
/// between a and the upper bounds) and reports the worst coordinate of
/// grad g(b) - grad g(a).
PropertyReport check_dr_submodular(const DifferentiableFunction& g, const FeasibleRegion& domain,
                                   int trials, double tol, std::uint64_t seed = 0);

/// Midpoint test: worst (c(x) + c(y)) / 2 - c((x + y) / 2) over random
/// segments.
PropertyReport check_concave(const DifferentiableFunction& c, const FeasibleRegion& domain,
                             int trials, double tol, std::uint64_t seed = 0);

/// 1.5 * max ||grad(a) - grad(b)|| / ||a - b|| over `samples` random pairs.
double estimate_smoothness(const GradientField& grad, const FeasibleRegion& domain, int samples,
                           std::uint64_t seed = 0);
double estimate_smoothness(const DifferentiableFunction& f, const FeasibleRegion& domain,
                           int samples, std::uint64_t seed = 0);
double estimate_smoothness(const ObjectivePair& obj, const FeasibleRegion& domain, int samples,
                           std::uint64_t seed = 0);

struct GridOracleResult {
  Point argmax;
  double value = 0.0;
  /// Weighted parts at argmax: lambda*G and (1-lambda)*C.
  double g_value = 0.0;
  double c_value = 0.0;
  double grid_step = 0.0;
  std::size_t points_scanned = 0;
};

/// Exhaustive scan of the grid {lo, lo + step, ...}^n over the region's
/// bounding box, keeping feasible points. Ties go to the lexicographically
/// smallest point. Points where F raises DomainError are skipped.
GridOracleResult grid_maximize(const ProblemInstance& p, double step);

inline constexpr std::size_t kGridMaxDimension = 6;

/// F(y) >= alpha G(o) + beta C(o) - additive_error.
struct GuaranteeBound {
  double alpha = 0.0;
  double beta = 0.0;
  double additive_error = 0.0;
  std::string source_row;

  static GuaranteeBound greedy(double epsilon, double smoothness, double diameter);
  static GuaranteeBound measured_greedy(bool g_monotone, bool c_monotone, double epsilon,
                                        double smoothness, double diameter);
  static GuaranteeBound gradient_combining(double epsilon, double eta, double smoothness,
                                           double diameter);
  /// alpha goes negative once 4 eps ln(1/eps) > 1 - 1/e (eps around 0.1).
  static GuaranteeBound non_oblivious(double epsilon, double smoothness, double diameter);
};

struct GuaranteeCheck {
  bool passed = false;
  double achieved = 0.0;
  double required = 0.0;
};

/// Compares the solver's output value against the bound evaluated at the
/// grid optimum. The grid optimum is feasible, so this is never stricter
/// than the bound at a true optimum.
GuaranteeCheck check_guarantee(const SolverReport& report, const GuaranteeBound& bound,
                               const GridOracleResult& oracle,
                               double slack = kTolerances.bound_slack);

}  // namespace fwsubmix
