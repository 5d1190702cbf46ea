#pragma once

#include "fwsubmix/point.hpp"
#include "fwsubmix/tolerances.hpp"

namespace fwsubmix {

struct LpSolution {
  Vector x;
  double value = 0.0;
  int pivots = 0;
};

/// Maximizes <c, x> subject to A x <= b, x <= u, x >= 0, with b >= 0 and
/// u >= 0 so the all-slack basis (x = 0) is feasible and no phase I is
/// needed.
///
/// Dense standard-form tableau. The bound rows x <= u are appended below A,
/// giving m + n rows and n + (m + n) columns. Pivoting uses Bland's rule:
/// the lowest-index column with reduced cost above `pivot_tol` enters, and
/// among rows achieving the minimum ratio the one whose basic variable has
/// the lowest index leaves. Throws LmoError after 50 * (m + 2n) pivots.
LpSolution maximize_packing_lp(const Matrix& a, const Vector& b, const Vector& u, const Vector& c,
                               double pivot_tol = kTolerances.pivot);

}  // namespace fwsubmix
