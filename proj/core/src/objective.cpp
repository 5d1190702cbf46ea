#include "fwsubmix/objective.hpp"

#include <cmath>
#include <string>

#include "fwsubmix/errors.hpp"

namespace fwsubmix {

ObjectivePair::ObjectivePair(FunctionPtr g, FunctionPtr c, double lambda, ObjectiveFlags flags,
                             std::optional<double> smoothness)
    : g_(std::move(g)), c_(std::move(c)), lambda_(lambda), flags_(flags), smoothness_(smoothness) {
  if (!g_ || !c_) throw ConfigError("objective pair needs both G and C");
  if (g_->dimension() != c_->dimension()) {
    throw DimensionError("G has dimension " + std::to_string(g_->dimension()) +
                         " but C has dimension " + std::to_string(c_->dimension()));
  }
  if (!(lambda_ >= 0.0 && lambda_ <= 1.0)) throw ConfigError("lambda must lie in [0, 1]");
  if (smoothness_ && !(*smoothness_ >= 0.0)) throw ConfigError("smoothness L must be >= 0");
}

ObjectivePair ObjectivePair::with_lambda(double lambda) const {
  return ObjectivePair(g_, c_, lambda, flags_, smoothness_);
}

namespace {

double checked_value(const DifferentiableFunction& f, const Vector& x) {
  const double v = f.value(x);
  if (!std::isfinite(v)) throw OracleError(f.name() + " returned a non-finite value");
  return v;
}

Vector checked_gradient(const DifferentiableFunction& f, const Vector& x) {
  Vector g = f.gradient(x);
  if (static_cast<std::size_t>(g.size()) != f.dimension()) {
    throw OracleError(f.name() + " returned a gradient of the wrong length");
  }
  if (!g.allFinite()) throw OracleError(f.name() + " returned a non-finite gradient");
  return g;
}

}  // namespace

double weighted_g_value(const ObjectivePair& obj, const Vector& x) {
  require_dimension(x, obj.dimension(), "evaluate_F");
  if (obj.g_weight() == 0.0) return 0.0;
  return obj.g_weight() * checked_value(obj.g(), x);
}

double weighted_c_value(const ObjectivePair& obj, const Vector& x) {
  require_dimension(x, obj.dimension(), "evaluate_F");
  if (obj.c_weight() == 0.0) return 0.0;
  return obj.c_weight() * checked_value(obj.c(), x);
}

Vector weighted_g_gradient(const ObjectivePair& obj, const Vector& x, OracleCounters& counters) {
  require_dimension(x, obj.dimension(), "gradient_F");
  ++counters.grad_g;
  if (obj.g_weight() == 0.0) return Vector::Zero(x.size());
  return obj.g_weight() * checked_gradient(obj.g(), x);
}

Vector weighted_c_gradient(const ObjectivePair& obj, const Vector& x, OracleCounters& counters) {
  require_dimension(x, obj.dimension(), "gradient_F");
  ++counters.grad_c;
  if (obj.c_weight() == 0.0) return Vector::Zero(x.size());
  return obj.c_weight() * checked_gradient(obj.c(), x);
}

double evaluate_F(const ObjectivePair& obj, const Vector& x) {
  return weighted_g_value(obj, x) + weighted_c_value(obj, x);
}

double evaluate_F(const ObjectivePair& obj, const Point& x) { return evaluate_F(obj, x.coords()); }

Vector gradient_F(const ObjectivePair& obj, const Vector& x, OracleCounters& counters) {
  return weighted_g_gradient(obj, x, counters) + weighted_c_gradient(obj, x, counters);
}

Vector gradient_F(const ObjectivePair& obj, const Point& x, OracleCounters& counters) {
  return gradient_F(obj, x.coords(), counters);
}

}  // namespace fwsubmix
