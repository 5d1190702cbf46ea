#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "fwsubmix/point.hpp"

namespace fwsubmix {

/// Value + gradient oracle for a smooth function on (a subset of) R^n.
/// Implementations must be immutable and re-entrant.
class DifferentiableFunction {
 public:
  virtual ~DifferentiableFunction() = default;

  virtual std::size_t dimension() const = 0;
  virtual double value(const Vector& x) const = 0;
  virtual Vector gradient(const Vector& x) const = 0;
  /// Short identifier used in reports and instance files.
  virtual std::string name() const = 0;
};

using FunctionPtr = std::shared_ptr<const DifferentiableFunction>;

/// Structural facts about G and C that gate which solvers may run.
struct ObjectiveFlags {
  bool g_monotone = false;
  bool g_nonneg = false;
  bool c_monotone = false;
  bool c_nonneg = false;
};

/// Oracle-call counters. Owned by a SolverReport, never global.
struct OracleCounters {
  std::int64_t grad_g = 0;
  std::int64_t grad_c = 0;
  std::int64_t lmo = 0;
};

/// F(x) = lambda * G(x) + (1 - lambda) * C(x) with G DR-submodular and C
/// concave. The solvers' G and C are the weighted parts lambda*G and
/// (1-lambda)*C, so lambda = 1/2 is the unweighted G + C up to a factor 2.
class ObjectivePair {
 public:
  ObjectivePair(FunctionPtr g, FunctionPtr c, double lambda = 0.5, ObjectiveFlags flags = {},
                std::optional<double> smoothness = std::nullopt);

  const DifferentiableFunction& g() const { return *g_; }
  const DifferentiableFunction& c() const { return *c_; }
  const FunctionPtr& g_ptr() const { return g_; }
  const FunctionPtr& c_ptr() const { return c_; }
  double lambda() const noexcept { return lambda_; }
  const ObjectiveFlags& flags() const noexcept { return flags_; }
  std::optional<double> smoothness() const noexcept { return smoothness_; }
  std::size_t dimension() const noexcept { return g_->dimension(); }

  double g_weight() const noexcept { return lambda_; }
  double c_weight() const noexcept { return 1.0 - lambda_; }

  /// Same G and C with a different mixing weight.
  ObjectivePair with_lambda(double lambda) const;

 private:
  FunctionPtr g_;
  FunctionPtr c_;
  double lambda_;
  ObjectiveFlags flags_;
  std::optional<double> smoothness_;
};

// Evaluation helpers. All check the dimension and turn non-finite oracle
// output into OracleError. Components whose weight is exactly zero are not
// evaluated.

double evaluate_F(const ObjectivePair& obj, const Point& x);
double evaluate_F(const ObjectivePair& obj, const Vector& x);

/// lambda * grad G + (1 - lambda) * grad C. Counts one call to each oracle.
Vector gradient_F(const ObjectivePair& obj, const Vector& x, OracleCounters& counters);
Vector gradient_F(const ObjectivePair& obj, const Point& x, OracleCounters& counters);

/// Weighted parts lambda*G(x) and (1-lambda)*C(x).
double weighted_g_value(const ObjectivePair& obj, const Vector& x);
double weighted_c_value(const ObjectivePair& obj, const Vector& x);
Vector weighted_g_gradient(const ObjectivePair& obj, const Vector& x, OracleCounters& counters);
Vector weighted_c_gradient(const ObjectivePair& obj, const Vector& x, OracleCounters& counters);

}  // namespace fwsubmix
