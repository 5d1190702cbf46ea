#include "fwsubmix/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fwsubmix/errors.hpp"
#include "fwsubmix/rng.hpp"

namespace fwsubmix {

namespace {

enum Stream : std::uint64_t { kHessian = 0, kConstraints = 1, kConcaveFactor = 2, kScan = 3 };

Matrix symmetric_uniform(std::size_t n, double lo, double hi, CounterRng& rng) {
  const auto k = static_cast<Eigen::Index>(n);
  Matrix h(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i; j < k; ++j) {
      h(i, j) = rng.uniform(lo, hi);
      h(j, i) = h(i, j);
    }
  }
  return h;
}

Matrix uniform_matrix(std::size_t rows, std::size_t cols, double lo, double hi, CounterRng& rng) {
  Matrix a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = rng.uniform(lo, hi);
  }
  return a;
}

// u_i = min_j b_j / A_ji
Vector tight_upper_bound(const Matrix& a, const Vector& b) {
  Vector u(a.cols());
  for (Eigen::Index i = 0; i < a.cols(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < a.rows(); ++j) best = std::min(best, b[j] / a(j, i));
    u[i] = best;
  }
  return u;
}

double half_abs_form(const Matrix& m, const Vector& u) {
  return 0.5 * u.dot(m.cwiseAbs() * u);
}

// Samples a point of {x >= 0, Ax <= b, x <= u}: uniform in the box [0,u],
// pulled back along the ray to the origin when it violates Ax <= b.
Vector sample_packing_point(const Matrix& a, const Vector& b, const Vector& u, CounterRng& rng) {
  Vector x(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) x[i] = rng.uniform(0.0, u[i]);
  const Vector load = a * x;
  double scale = 1.0;
  for (Eigen::Index j = 0; j < load.size(); ++j) {
    if (load[j] > b[j]) scale = std::min(scale, b[j] / load[j]);
  }
  return scale * x;
}

void require_sizes(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw ConfigError("QP instance needs n >= 1 and m >= 1");
}

}  // namespace

ProblemInstance QpInstance::problem(double lambda) const {
  return ProblemInstance(ObjectivePair(g, c, lambda, flags), region);
}

QpInstance make_qp_instance(std::size_t n, std::size_t m, std::uint64_t seed) {
  require_sizes(n, m);
  CounterRng h_rng(seed, kHessian);
  CounterRng a_rng(seed, kConstraints);
  CounterRng r_rng(seed, kConcaveFactor);
  CounterRng scan_rng(seed, kScan);

  Matrix h = symmetric_uniform(n, -1.0, 0.0, h_rng);
  Matrix a = uniform_matrix(m, n, 0.01, 1.01, a_rng);
  Vector b = Vector::Ones(static_cast<Eigen::Index>(m));
  Vector u = tight_upper_bound(a, b);
  Vector lin = -0.2 * h.transpose() * u;
  Matrix r = uniform_matrix(n, n, 0.0, 1.0, r_rng);
  Matrix d = -(r * r.transpose()) / 10.0;
  d = 0.5 * (d + d.transpose());

  QpInstance inst{
      QuadraticObjective::dr_submodular(h, lin, 10.0),
      std::make_shared<QuadraticObjective>(d, Vector::Zero(static_cast<Eigen::Index>(n)), 0.0),
      FeasibleRegion::polytope(a, b, u),
      ObjectiveFlags{},
  };

  double g_min = inst.g->value(Vector::Zero(static_cast<Eigen::Index>(n)));
  for (int k = 0; k < 1000; ++k) {
    g_min = std::min(g_min, inst.g->value(sample_packing_point(a, b, u, scan_rng)));
  }
  inst.g_min_sampled = g_min;
  inst.g_nonneg_verified = g_min >= 0.0;
  inst.flags.g_nonneg = inst.g_nonneg_verified;
  return inst;
}

QpInstance make_structured_qp(const StructuredQpSpec& spec) {
  require_sizes(spec.n, spec.m);
  CounterRng h_rng(spec.seed, kHessian);
  CounterRng a_rng(spec.seed, kConstraints);
  CounterRng r_rng(spec.seed, kConcaveFactor);

  Matrix h = symmetric_uniform(spec.n, -1.0, 0.0, h_rng);
  Matrix a = uniform_matrix(spec.m, spec.n, 0.01, 1.01, a_rng);
  Vector b = Vector::Ones(static_cast<Eigen::Index>(spec.m));
  Vector u = tight_upper_bound(a, b).cwiseMin(1.0);
  Matrix r = uniform_matrix(spec.n, spec.n, 0.0, 1.0, r_rng);
  Matrix d = -(r * r.transpose()) / 10.0;
  d = 0.5 * (d + d.transpose());

  Vector g_lin = spec.g_monotone ? Vector(-h * u) : Vector(-0.2 * h * u);
  const double g_const = spec.g_monotone ? 0.0 : half_abs_form(h, u);
  Vector c_lin = spec.c_monotone ? Vector(-d * u) : Vector(-0.2 * d * u);
  double c_const = 0.0;
  if (!spec.c_monotone) c_const = spec.c_nonneg ? half_abs_form(d, u) : -1.0;

  QpInstance inst{
      QuadraticObjective::dr_submodular(h, g_lin, g_const),
      std::make_shared<QuadraticObjective>(d, c_lin, c_const),
      FeasibleRegion::polytope(a, b, u),
      ObjectiveFlags{spec.g_monotone, true, spec.c_monotone, spec.c_monotone || spec.c_nonneg},
  };
  return inst;
}

std::vector<PlanePoint> grid_points(std::size_t side) {
  if (side < 2) throw ConfigError("grid needs at least 2 points per side");
  const double spacing = 1.0 / static_cast<double>(side - 1);
  std::vector<PlanePoint> pts;
  pts.reserve(side * side);
  for (std::size_t row = 0; row < side; ++row) {
    for (std::size_t col = 0; col < side; ++col) {
      pts.push_back({static_cast<double>(col) * spacing, static_cast<double>(row) * spacing});
    }
  }
  return pts;
}

Matrix make_gaussian_kernel(const std::vector<PlanePoint>& points, double sigma) {
  if (!(sigma > 0.0)) throw ConfigError("kernel width sigma must be > 0");
  const auto n = static_cast<Eigen::Index>(points.size());
  const double denom = 2.0 * sigma * sigma;
  Matrix l(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    l(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double dx = points[static_cast<std::size_t>(i)][0] - points[static_cast<std::size_t>(j)][0];
      const double dy = points[static_cast<std::size_t>(i)][1] - points[static_cast<std::size_t>(j)][1];
      l(i, j) = std::exp(-(dx * dx + dy * dy) / denom);
      l(j, i) = l(i, j);
    }
  }
  return l;
}

Matrix make_gaussian_design(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ConfigError("design needs n >= 1");
  CounterRng rng(seed, 0);
  const auto k = static_cast<Eigen::Index>(n);
  Matrix y(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) y(i, j) = rng.normal();
  }
  return y;
}

}  // namespace fwsubmix
