#include "fwsubmix/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "fwsubmix/errors.hpp"

namespace fwsubmix {

namespace {

Vector central_differences(const ScalarField& f, const Vector& x, double h) {
  Vector g(x.size());
  Vector probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double up = f(probe);
    probe[i] = x[i] - h;
    const double down = f(probe);
    probe[i] = x[i];
    g[i] = (up - down) / (2.0 * h);
  }
  return g;
}

}  // namespace

Vector finite_diff_grad(const ScalarField& f, const Vector& x, double h) {
  if (!(h > 0.0)) throw ConfigError("finite-difference step must be > 0");
  try {
    return central_differences(f, x, h);
  } catch (const DomainError&) {
    return central_differences(f, x, h / 10.0);
  }
}

Vector finite_diff_grad(const DifferentiableFunction& f, const Vector& x, double h) {
  require_dimension(x, f.dimension(), "finite-difference point");
  return finite_diff_grad([&f](const Vector& v) { return f.value(v); }, x, h);
}

double relative_error(const Vector& a, const Vector& b) {
  const double scale = std::max({1.0, a.norm(), b.norm()});
  return (a - b).norm() / scale;
}

Vector sample_feasible(const FeasibleRegion& region, CounterRng& rng) {
  const Vector lo = region.lower_bounds();
  const Vector hi = region.upper_bounds();
  Vector x(lo.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = rng.uniform(lo[i], hi[i]);
  if (const auto* c = std::get_if<Cardinality>(&region.kind())) {
    const double total = x.sum();
    if (total > c->budget) x *= c->budget / total;
  } else if (const auto* p = std::get_if<Polytope>(&region.kind())) {
    const Vector load = p->a * x;
    double scale = 1.0;
    for (Eigen::Index j = 0; j < load.size(); ++j) {
      if (load[j] > p->b[j]) scale = std::min(scale, p->b[j] / load[j]);
    }
    x *= scale;
  }
  return x;
}

PropertyReport check_dr_submodular(const DifferentiableFunction& g, const FeasibleRegion& domain,
                                   int trials, double tol, std::uint64_t seed) {
  if (trials < 1) throw ConfigError("property check needs trials >= 1");
  CounterRng rng(seed, 0);
  const Vector hi = domain.upper_bounds();
  PropertyReport out{true, -std::numeric_limits<double>::infinity(), trials};
  for (int t = 0; t < trials; ++t) {
    const Vector a = sample_feasible(domain, rng);
    Vector b = a;
    for (Eigen::Index i = 0; i < b.size(); ++i) b[i] = rng.uniform(a[i], hi[i]);
    out.max_violation = std::max(out.max_violation, (g.gradient(b) - g.gradient(a)).maxCoeff());
  }
  out.max_violation = std::max(out.max_violation, 0.0);
  out.passed = out.max_violation <= tol;
  return out;
}

PropertyReport check_concave(const DifferentiableFunction& c, const FeasibleRegion& domain,
                             int trials, double tol, std::uint64_t seed) {
  if (trials < 1) throw ConfigError("property check needs trials >= 1");
  CounterRng rng(seed, 1);
  PropertyReport out{true, 0.0, trials};
  for (int t = 0; t < trials; ++t) {
    const Vector x = sample_feasible(domain, rng);
    const Vector y = sample_feasible(domain, rng);
    const double gap = 0.5 * (c.value(x) + c.value(y)) - c.value(0.5 * (x + y));
    out.max_violation = std::max(out.max_violation, gap);
  }
  out.passed = out.max_violation <= tol;
  return out;
}

double estimate_smoothness(const GradientField& grad, const FeasibleRegion& domain, int samples,
                           std::uint64_t seed) {
  if (samples < 2) throw ConfigError("smoothness estimate needs samples >= 2");
  CounterRng rng(seed, 2);
  double worst = 0.0;
  for (int t = 0; t < samples; ++t) {
    const Vector a = sample_feasible(domain, rng);
    const Vector b = sample_feasible(domain, rng);
    const double dist = (a - b).norm();
    if (dist < 1e-12) continue;
    worst = std::max(worst, (grad(a) - grad(b)).norm() / dist);
  }
  return 1.5 * worst;
}

double estimate_smoothness(const DifferentiableFunction& f, const FeasibleRegion& domain,
                           int samples, std::uint64_t seed) {
  return estimate_smoothness([&f](const Vector& x) { return f.gradient(x); }, domain, samples,
                             seed);
}

double estimate_smoothness(const ObjectivePair& obj, const FeasibleRegion& domain, int samples,
                           std::uint64_t seed) {
  return estimate_smoothness(
      [&obj](const Vector& x) {
        OracleCounters scratch;
        return gradient_F(obj, x, scratch);
      },
      domain, samples, seed);
}

GridOracleResult grid_maximize(const ProblemInstance& p, double step) {
  const std::size_t n = p.dimension();
  if (n > kGridMaxDimension) {
    throw ConfigError("grid oracle is limited to n <= " + std::to_string(kGridMaxDimension));
  }
  if (!(step > 0.0)) throw ConfigError("grid step must be > 0");

  const Vector lo = p.region().lower_bounds();
  const Vector hi = p.region().upper_bounds();
  std::vector<long> counts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    counts[i] = static_cast<long>(std::floor((hi[k] - lo[k]) / step + 1e-9)) + 1;
  }

  GridOracleResult out;
  out.grid_step = step;
  out.value = -std::numeric_limits<double>::infinity();
  std::vector<long> idx(n, 0);
  Vector x = lo;
  bool found = false;
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      x[static_cast<Eigen::Index>(i)] = lo[static_cast<Eigen::Index>(i)] + static_cast<double>(idx[i]) * step;
    }
    if (contains(p.region(), x)) {
      try {
        const double v = evaluate_F(p.objective(), x);
        ++out.points_scanned;
        if (v > out.value) {
          out.value = v;
          out.argmax = Point(x);
          found = true;
        }
      } catch (const DomainError&) {
      }
    }
    // Odometer with the first coordinate most significant keeps the scan in
    // lexicographic order, so strict improvement implements the tie rule.
    bool done = true;
    for (std::size_t pos = n; pos-- > 0;) {
      if (++idx[pos] < counts[pos]) {
        done = false;
        break;
      }
      idx[pos] = 0;
    }
    if (done) break;
  }
  if (!found) throw Error("grid oracle found no feasible point in the domain of F");
  out.g_value = weighted_g_value(p.objective(), out.argmax.coords());
  out.c_value = weighted_c_value(p.objective(), out.argmax.coords());
  return out;
}

GuaranteeBound GuaranteeBound::greedy(double epsilon, double smoothness, double diameter) {
  const double r = 1.0 - 1.0 / std::numbers::e;
  return {r, r, epsilon * smoothness * diameter * diameter, "greedy: monotone G, monotone C"};
}

GuaranteeBound GuaranteeBound::measured_greedy(bool g_monotone, bool c_monotone, double epsilon,
                                               double smoothness, double diameter) {
  const double hi = 1.0 - 1.0 / std::numbers::e;
  const double lo = 1.0 / std::numbers::e;
  std::string row = "measured greedy: ";
  row += g_monotone ? "monotone G, " : "non-monotone G, ";
  row += c_monotone ? "monotone C" : "non-monotone C";
  return {g_monotone ? hi : lo, c_monotone ? hi : lo, epsilon * smoothness * diameter * diameter,
          row};
}

GuaranteeBound GuaranteeBound::gradient_combining(double epsilon, double eta, double smoothness,
                                                  double diameter) {
  return {0.5 * (1.0 - epsilon), 1.0,
          epsilon * (eta + 3.0 * smoothness * diameter * diameter),
          "gradient combining: monotone G, non-negative C"};
}

GuaranteeBound GuaranteeBound::non_oblivious(double epsilon, double smoothness, double diameter) {
  const double loss = 4.0 * epsilon * std::log(1.0 / epsilon);
  return {1.0 - 1.0 / std::numbers::e - loss, 1.0 - loss,
          4.0 * epsilon * smoothness * diameter * diameter,
          "non-oblivious: monotone G, non-negative C"};
}

GuaranteeCheck check_guarantee(const SolverReport& report, const GuaranteeBound& bound,
                               const GridOracleResult& oracle, double slack) {
  GuaranteeCheck out;
  out.achieved = report.output_value;
  out.required = bound.alpha * oracle.g_value + bound.beta * oracle.c_value -
                 bound.additive_error - slack;
  out.passed = out.achieved >= out.required;
  return out;
}

}  // namespace fwsubmix
