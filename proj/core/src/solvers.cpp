#include "fwsubmix/solvers.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <string>

#include "fwsubmix/errors.hpp"
#include "fwsubmix/objectives.hpp"

namespace fwsubmix {

namespace {

using Clock = std::chrono::steady_clock;

// Coordinates the solver actually iterates in. Greedy variants need the
// origin in the region; a box with a non-zero lower corner is shifted so the
// corner sits at 0.
struct Frame {
  ProblemInstance problem;
  Vector offset;
  bool translated = false;
};

Frame zero_start_frame(const ProblemInstance& p, std::string_view solver) {
  const auto n = static_cast<Eigen::Index>(p.dimension());
  if (contains(p.region(), Vector::Zero(n))) return {p, Vector::Zero(n), false};
  if (!p.region().is_box()) {
    throw ConfigError(std::string(solver) + " starts at 0, which is not in the region");
  }
  const Vector lower = p.region().lower_bounds();
  const Vector upper = p.region().upper_bounds();
  const ObjectivePair& obj = p.objective();
  ObjectivePair shifted(std::make_shared<TranslatedFunction>(obj.g_ptr(), lower),
                        std::make_shared<TranslatedFunction>(obj.c_ptr(), lower), obj.lambda(),
                        obj.flags(), obj.smoothness());
  return {ProblemInstance(std::move(shifted), FeasibleRegion::box(Vector::Zero(n), upper - lower)),
          lower, true};
}

class Recorder {
 public:
  Recorder(const Frame& frame, std::string_view solver) : frame_(frame), start_(Clock::now()) {
    report_.solver = std::string(solver);
    report_.translated = frame.translated;
  }

  void record(const Vector& y) {
    const double v = evaluate_F(frame_.problem.objective(), y);
    report_.iterates.emplace_back(frame_.translated ? Vector(frame_.offset + y) : y);
    report_.values.push_back(v);
  }

  OracleCounters& calls() { return report_.calls; }
  SolverReport& report() { return report_; }

  SolverReport finish(bool output_is_best) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < report_.values.size(); ++i) {
      if (report_.values[i] > report_.values[best]) best = i;
    }
    report_.best = report_.iterates[best];
    report_.best_value = report_.values[best];
    const std::size_t out = output_is_best ? best : report_.values.size() - 1;
    report_.output = report_.iterates[out];
    report_.output_value = report_.values[out];
    report_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  const Frame& frame_;
  SolverReport report_;
  Clock::time_point start_;
};

void require(bool ok, std::string_view solver, std::string_view what) {
  if (!ok) throw ConfigError(std::string(solver) + " requires " + std::string(what));
}

int checked_iterations(const SolverConfig& cfg, int derived) {
  const int k = cfg.iterations.value_or(derived);
  if (k < 0) throw ConfigError("iteration count must be >= 0");
  return k;
}

double checked_step(const SolverConfig& cfg, double derived) {
  const double s = cfg.step.value_or(derived);
  if (!(s >= 0.0 && s <= 1.0)) throw ConfigError("step size must lie in [0, 1]");
  return s;
}

Vector checked_start(const ProblemInstance& p, const SolverConfig& cfg) {
  if (!cfg.start) return origin_point(p.region()).coords();
  require_dimension(cfg.start->coords(), p.dimension(), "start point");
  if (!contains(p.region(), *cfg.start, kTolerances.iterate_membership)) {
    throw ConfigError("start point is not feasible");
  }
  return cfg.start->coords();
}

Vector lmo_vertex(const FeasibleRegion& r, const Vector& direction, OracleCounters& calls) {
  ++calls.lmo;
  return lmo(r, direction).vertex.coords();
}

}  // namespace

// ------------------------------------------------------------------ naming

std::string_view solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::greedy: return "greedy_fw";
    case SolverKind::measured_greedy: return "measured_greedy_fw";
    case SolverKind::gradient_combining: return "gradient_combining_fw";
    case SolverKind::non_oblivious: return "non_oblivious_fw";
    case SolverKind::standard_fw: return "standard_fw";
    case SolverKind::pga: return "pga";
  }
  return "unknown";
}

std::optional<SolverKind> parse_solver(std::string_view name) {
  for (SolverKind k : kAllSolvers) {
    if (solver_name(k) == name) return k;
  }
  return std::nullopt;
}

bool is_best_of_trajectory(SolverKind kind) {
  return kind == SolverKind::gradient_combining || kind == SolverKind::non_oblivious;
}

SolverReport run_solver(SolverKind kind, const ProblemInstance& problem, const SolverConfig& cfg) {
  switch (kind) {
    case SolverKind::greedy: return greedy_fw(problem, cfg);
    case SolverKind::measured_greedy: return measured_greedy_fw(problem, cfg);
    case SolverKind::gradient_combining: return gradient_combining_fw(problem, cfg);
    case SolverKind::non_oblivious: return non_oblivious_fw(problem, cfg);
    case SolverKind::standard_fw: return standard_fw(problem, cfg);
    case SolverKind::pga: return pga(problem, cfg);
  }
  throw ConfigError("unknown solver");
}

// ---------------------------------------------------------- epsilon helpers

double normalize_epsilon(double epsilon, int power) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ConfigError("epsilon must lie in (0, 1)");
  if (power < 1) throw ConfigError("epsilon normalization power must be >= 1");
  const double target = std::pow(epsilon, -power);
  // Tolerate representation error: 0.2^-3 evaluates to 125.00000000000003.
  const double count = std::ceil(target * (1.0 - 1e-12));
  if (power == 1) return 1.0 / count;
  return std::pow(count, -1.0 / power);
}

int inverse_power_count(double epsilon, int power) {
  return static_cast<int>(std::llround(std::pow(epsilon, -power)));
}

int nonoblivious_iteration_count(double epsilon) {
  // e^{-1} * e (1 - ln eps) / eps^2
  const double k = (1.0 - std::log(epsilon)) / (epsilon * epsilon);
  return static_cast<int>(std::ceil(k * (1.0 - 1e-12)));
}

double nonoblivious_epsilon_for_iterations(double iterations) {
  const auto count = [](double eps) { return (1.0 - std::log(eps)) / (eps * eps); };
  constexpr double kUpper = 0.25;
  const double just_below = std::nextafter(kUpper, 0.0);
  if (!(iterations > 0.0)) throw ConfigError("iteration target must be > 0");
  if (count(just_below) >= iterations) return just_below;
  // count() is decreasing on (0, 1/4).
  double lo = 1e-9;
  double hi = kUpper;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (count(mid) > iterations) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::min(0.5 * (lo + hi), just_below);
}

// ---------------------------------------------------------------- solvers

SolverReport greedy_fw(const ProblemInstance& problem, const SolverConfig& cfg) {
  constexpr std::string_view kName = "greedy_fw";
  const ObjectiveFlags& f = problem.objective().flags();
  if (cfg.check_preconditions) {
    require(f.g_monotone && f.g_nonneg, kName, "G monotone and non-negative");
    require(f.c_monotone && f.c_nonneg, kName, "C monotone and non-negative");
  }
  const double eps = normalize_epsilon(cfg.epsilon, 1);
  const int steps = checked_iterations(cfg, inverse_power_count(eps, 1));
  const double step = checked_step(cfg, eps);

  const Frame frame = zero_start_frame(problem, kName);
  const ProblemInstance& p = frame.problem;
  Recorder rec(frame, kName);
  Vector y = Vector::Zero(static_cast<Eigen::Index>(p.dimension()));
  rec.record(y);
  for (int k = 0; k < steps; ++k) {
    const Vector grad = gradient_F(p.objective(), y, rec.calls());
    y += step * lmo_vertex(p.region(), grad, rec.calls());
    rec.record(y);
  }
  rec.report().epsilon = eps;
  rec.report().step = step;
  rec.report().iterations = steps;
  return rec.finish(false);
}

SolverReport measured_greedy_fw(const ProblemInstance& problem, const SolverConfig& cfg) {
  constexpr std::string_view kName = "measured_greedy_fw";
  const ObjectiveFlags& f = problem.objective().flags();
  if (cfg.check_preconditions) {
    require(f.g_nonneg && f.c_nonneg, kName, "G and C non-negative");
    require(problem.region().down_closed() || problem.region().is_box(), kName,
            "a down-closed region");
  }
  const double eps = normalize_epsilon(cfg.epsilon, 1);
  const int steps = checked_iterations(cfg, inverse_power_count(eps, 1));
  const double step = checked_step(cfg, eps);

  const Frame frame = zero_start_frame(problem, kName);
  const ProblemInstance& p = frame.problem;
  if (cfg.check_preconditions) {
    require(p.region().down_closed(), kName, "a down-closed region");
    require(p.region().within_unit_cube(), kName, "a region inside [0,1]^n");
  }
  // Iterate bound 0 <= y_j <= 1 - (1 - step)^k holds whenever P sits in the
  // unit cube; it is what keeps the output feasible.
  const bool check_cap = p.region().within_unit_cube();

  Recorder rec(frame, kName);
  const auto n = static_cast<Eigen::Index>(p.dimension());
  Vector y = Vector::Zero(n);
  rec.record(y);
  for (int k = 1; k <= steps; ++k) {
    const Vector room = Vector::Ones(n) - y;
    const Vector grad = gradient_F(p.objective(), y, rec.calls());
    const Vector s = lmo_vertex(p.region(), room.cwiseProduct(grad), rec.calls());
    y += step * room.cwiseProduct(s);
    if (check_cap) {
      const double cap = 1.0 - std::pow(1.0 - step, k);
      if (y.maxCoeff() > cap + 1e-12 || y.minCoeff() < -1e-12) {
        throw Error("measured greedy iterate left [0, 1 - (1 - eps)^i] at step " +
                    std::to_string(k));
      }
    }
    rec.record(y);
  }
  rec.report().epsilon = eps;
  rec.report().step = step;
  rec.report().iterations = steps;
  return rec.finish(false);
}

InitializerResult concave_fw_initializer(const DifferentiableFunction& c,
                                         const FeasibleRegion& region, int iterations,
                                         OracleCounters* counters,
                                         const std::optional<Point>& start) {
  if (iterations < 0) throw ConfigError("initializer iterations must be >= 0");
  if (c.dimension() != region.dimension()) {
    throw DimensionError("initializer: function and region dimensions differ");
  }
  Vector y = start ? start->coords() : origin_point(region).coords();
  InitializerResult out{Point(y), std::numeric_limits<double>::infinity(), 0};
  if (iterations == 0) return out;

  OracleCounters local;
  OracleCounters& calls = counters != nullptr ? *counters : local;
  for (int t = 0; t <= iterations; ++t) {
    ++calls.grad_c;
    const Vector grad = c.gradient(y);
    if (!grad.allFinite()) throw OracleError(c.name() + " returned a non-finite gradient");
    const Vector s = lmo_vertex(region, grad, calls);
    const double gap = grad.dot(s - y);
    if (gap < out.eta) {
      out.eta = std::max(gap, 0.0);
      out.point = Point(y);
      out.iterations = t;
    }
    if (t == iterations) break;
    const double step = 2.0 / (t + 2.0);
    y = (1.0 - step) * y + step * s;
  }
  return out;
}

SolverReport gradient_combining_fw(const ProblemInstance& problem, const SolverConfig& cfg) {
  constexpr std::string_view kName = "gradient_combining_fw";
  const ObjectivePair& obj = problem.objective();
  if (cfg.check_preconditions) {
    require(obj.flags().g_monotone && obj.flags().g_nonneg, kName, "G monotone and non-negative");
  }
  const double eps = normalize_epsilon(cfg.epsilon, 3);
  const int steps = checked_iterations(cfg, inverse_power_count(eps, 3));
  const double step = checked_step(cfg, eps * eps);

  const Frame frame{problem, Vector::Zero(static_cast<Eigen::Index>(problem.dimension())), false};
  Recorder rec(frame, kName);

  Vector y;
  double eta = std::numeric_limits<double>::quiet_NaN();
  if (cfg.start) {
    y = checked_start(problem, cfg);
  } else {
    const int init_iters =
        cfg.initializer_iterations.value_or(static_cast<int>(std::ceil(10.0 / eps - 1e-9)));
    const ScaledFunction weighted_c(obj.c_ptr(), obj.c_weight());
    InitializerResult init =
        concave_fw_initializer(weighted_c, problem.region(), init_iters, &rec.calls());
    if (!std::isfinite(init.eta)) {
      throw ConfigError(std::string(kName) + " needs a certified concave initializer (iterations > 0)");
    }
    y = init.point.coords();
    eta = init.eta;
  }

  rec.record(y);
  for (int k = 0; k < steps; ++k) {
    const Vector direction = weighted_g_gradient(obj, y, rec.calls()) +
                             2.0 * weighted_c_gradient(obj, y, rec.calls());
    const Vector s = lmo_vertex(problem.region(), direction, rec.calls());
    y = (1.0 - step) * y + step * s;
    rec.record(y);
  }
  rec.report().epsilon = eps;
  rec.report().step = step;
  rec.report().iterations = steps;
  rec.report().eta = eta;
  return rec.finish(true);
}

SolverReport non_oblivious_fw(const ProblemInstance& problem, const SolverConfig& cfg) {
  constexpr std::string_view kName = "non_oblivious_fw";
  const ObjectivePair& obj = problem.objective();
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 0.25)) {
    throw ConfigError(std::string(kName) + " requires epsilon in (0, 1/4)");
  }
  if (cfg.check_preconditions) {
    require(obj.flags().g_monotone && obj.flags().g_nonneg, kName, "G monotone and non-negative");
    require(obj.flags().c_nonneg, kName, "C non-negative");
  }
  const double eps = normalize_epsilon(cfg.epsilon, 1);
  const int steps = checked_iterations(cfg, nonoblivious_iteration_count(eps));
  const double step = checked_step(cfg, eps);
  const NonObliviousWrapper surrogate(obj.g_ptr(), cfg.nonoblivious_epsilon.value_or(eps));

  const Frame frame{problem, Vector::Zero(static_cast<Eigen::Index>(problem.dimension())), false};
  Recorder rec(frame, kName);
  Vector y = checked_start(problem, cfg);
  rec.record(y);
  const double surrogate_weight = obj.g_weight() / std::numbers::e;
  for (int k = 0; k < steps; ++k) {
    rec.calls().grad_g += surrogate.terms();
    Vector direction = weighted_c_gradient(obj, y, rec.calls());
    if (surrogate_weight != 0.0) {
      const Vector g_bar = surrogate.gradient(y);
      if (!g_bar.allFinite()) throw OracleError(surrogate.name() + " returned a non-finite gradient");
      direction += surrogate_weight * g_bar;
    }
    const Vector s = lmo_vertex(problem.region(), direction, rec.calls());
    y = (1.0 - step) * y + step * s;
    rec.record(y);
  }
  rec.report().epsilon = eps;
  rec.report().step = step;
  rec.report().iterations = steps;
  return rec.finish(true);
}

SolverReport standard_fw(const ProblemInstance& problem, const SolverConfig& cfg) {
  constexpr std::string_view kName = "standard_fw";
  const int steps =
      checked_iterations(cfg, static_cast<int>(std::llround(1.0 / cfg.epsilon)));
  const double step = checked_step(cfg, steps > 0 ? 1.0 / steps : 0.0);

  const Frame frame{problem, Vector::Zero(static_cast<Eigen::Index>(problem.dimension())), false};
  Recorder rec(frame, kName);
  Vector y = checked_start(problem, cfg);
  rec.record(y);
  for (int k = 0; k < steps; ++k) {
    const Vector grad = gradient_F(problem.objective(), y, rec.calls());
    const Vector s = lmo_vertex(problem.region(), grad, rec.calls());
    y += step * (s - y);
    rec.record(y);
  }
  rec.report().step = step;
  rec.report().iterations = steps;
  return rec.finish(false);
}

SolverReport pga(const ProblemInstance& problem, const SolverConfig& cfg) {
  constexpr std::string_view kName = "pga";
  if (!supports_projection(problem.region())) {
    throw UnsupportedRegionError(std::string(kName) + " needs a box or cardinality region, got " +
                                 problem.region().kind_name());
  }
  const int steps =
      checked_iterations(cfg, static_cast<int>(std::llround(1.0 / cfg.epsilon)));
  const double step = cfg.step.value_or(steps > 0 ? 1.0 / steps : 0.0);
  if (!(step >= 0.0)) throw ConfigError("step size must be >= 0");

  const Frame frame{problem, Vector::Zero(static_cast<Eigen::Index>(problem.dimension())), false};
  Recorder rec(frame, kName);
  Vector y = checked_start(problem, cfg);
  rec.record(y);
  for (int k = 0; k < steps; ++k) {
    const Vector grad = gradient_F(problem.objective(), y, rec.calls());
    y = project(problem.region(), y + step * grad).coords();
    rec.record(y);
  }
  rec.report().step = step;
  rec.report().iterations = steps;
  return rec.finish(false);
}

}  // namespace fwsubmix
