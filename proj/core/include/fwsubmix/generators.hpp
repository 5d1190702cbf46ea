#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fwsubmix/objectives.hpp"
#include "fwsubmix/problem.hpp"
#include "fwsubmix/region.hpp"

namespace fwsubmix {

// Seeded instance generators. Every generator draws from CounterRng streams
// keyed by (seed, stream index); the stream layout is listed per generator so
// the instances can be reproduced elsewhere.

/// Quadratic-programming instance: G = 1/2 x^T H x + h^T x + c over
/// {x >= 0, A x <= b, x <= u}, C = 1/2 x^T D x.
struct QpInstance {
  std::shared_ptr<QuadraticObjective> g;
  std::shared_ptr<QuadraticObjective> c;
  FeasibleRegion region;
  ObjectiveFlags flags;
  /// False when the non-negativity scan found a sampled point with G < 0.
  bool g_nonneg_verified = true;
  double g_min_sampled = 0.0;

  ProblemInstance problem(double lambda = 0.5) const;
};

/// Streams: 0 -> H (upper triangle incl. diagonal, row-major, U[-1,0)),
/// 1 -> A (row-major, U[0.01,1.01)), 2 -> R (n x n row-major, U[0,1)),
/// 3 -> non-negativity scan points.
/// b = 1, u_i = min_j b_j / A_ji, h = -0.2 H^T u, c = 10, D = -R R^T / 10
/// (so C(x) = x^T (-R R^T) x / 20).
QpInstance make_qp_instance(std::size_t n, std::size_t m, std::uint64_t seed);

/// Knobs for QP instances with prescribed monotonicity, used by the
/// guarantee suites. Same streams as make_qp_instance; u is additionally
/// capped at 1 so the region sits inside the unit cube.
///   G monotone:      h = -H u,          c_G = 0
///   G non-monotone:  h = -0.2 H u,      c_G = 1/2 sum|H_ij| u_i u_j
///   C monotone:      d = -D u,          c_C = 0
///   C non-monotone:  d = -0.2 D u,      c_C = 1/2 sum|D_ij| u_i u_j  (or -1
///                    when c_nonneg is false)
/// With these constants G and C are provably non-negative on the region
/// (except C when c_nonneg is false).
struct StructuredQpSpec {
  std::size_t n = 4;
  std::size_t m = 2;
  std::uint64_t seed = 0;
  bool g_monotone = true;
  bool c_monotone = true;
  bool c_nonneg = true;
};

QpInstance make_structured_qp(const StructuredQpSpec& spec);

using PlanePoint = std::array<double, 2>;

/// side x side points evenly spaced in [0,1]^2 with spacing 1/(side-1).
/// Point k sits at (k % side, k / side) / (side - 1): point 0 at the
/// origin, point side-1 at (1, 0), point side*side-1 at (1, 1).
std::vector<PlanePoint> grid_points(std::size_t side);

/// L_ij = exp(-d(i,j)^2 / (2 sigma^2)).
Matrix make_gaussian_kernel(const std::vector<PlanePoint>& points, double sigma);

/// n x n design matrix with i.i.d. standard normal entries (stream 0,
/// row-major).
Matrix make_gaussian_design(std::size_t n, std::uint64_t seed);

}  // namespace fwsubmix
