#include "fwsubmix/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "fwsubmix/errors.hpp"

namespace fwsubmix {

LpSolution maximize_packing_lp(const Matrix& a, const Vector& b, const Vector& u, const Vector& c,
                               double pivot_tol) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  require_dimension(b, static_cast<std::size_t>(m), "simplex b");
  require_dimension(u, static_cast<std::size_t>(n), "simplex u");
  require_dimension(c, static_cast<std::size_t>(n), "simplex c");
  if (!c.allFinite()) throw LmoError("LMO direction has non-finite entries");

  const Eigen::Index rows = m + n;
  const Eigen::Index cols = n + rows;  // structural + slack
  const Eigen::Index rhs = cols;

  // Constraint rows followed by the reduced-cost row.
  Matrix t = Matrix::Zero(rows + 1, cols + 1);
  t.topLeftCorner(m, n) = a;
  t.block(m, 0, n, n).setIdentity();
  t.block(0, n, rows, rows).setIdentity();
  t.block(0, rhs, m, 1) = b;
  t.block(m, rhs, n, 1) = u;
  t.block(rows, 0, 1, n) = c.transpose();

  std::vector<Eigen::Index> basis(static_cast<std::size_t>(rows));
  for (Eigen::Index i = 0; i < rows; ++i) basis[static_cast<std::size_t>(i)] = n + i;

  const int cap = static_cast<int>(50 * (m + 2 * n));
  int pivots = 0;
  for (;;) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (t(rows, j) > pivot_tol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double coef = t(i, enter);
      if (coef <= pivot_tol) continue;
      const double ratio = t(i, rhs) / coef;
      const double tie = 1e-12 * (1.0 + std::abs(best_ratio));
      if (leave < 0 || ratio < best_ratio - tie) {
        best_ratio = ratio;
        leave = i;
      } else if (ratio <= best_ratio + tie &&
                 basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)]) {
        leave = i;
      }
    }
    // Every structural column has a +1 in its bound row, so a bounded entry
    // always exists; slack columns only enter with a ratio row too.
    if (leave < 0) throw LmoError("simplex found an unbounded direction in a compact region");

    if (++pivots > cap) {
      throw LmoError("simplex exceeded the iteration cap of " + std::to_string(cap));
    }

    t.row(leave) /= t(leave, enter);
    for (Eigen::Index i = 0; i <= rows; ++i) {
      if (i == leave) continue;
      const double factor = t(i, enter);
      if (factor != 0.0) t.row(i) -= factor * t.row(leave);
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (t(i, rhs) < 0.0 && t(i, rhs) > -pivot_tol) t(i, rhs) = 0.0;
    }
    basis[static_cast<std::size_t>(leave)] = enter;
  }

  LpSolution out;
  out.x = Vector::Zero(n);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Eigen::Index var = basis[static_cast<std::size_t>(i)];
    if (var < n) out.x[var] = std::clamp(t(i, rhs), 0.0, u[var]);
  }
  out.value = c.dot(out.x);
  out.pivots = pivots;
  return out;
}

}  // namespace fwsubmix
