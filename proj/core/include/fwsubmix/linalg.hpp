#pragma once

#include <string_view>

#include <Eigen/LU>

#include "fwsubmix/point.hpp"

namespace fwsubmix {

struct SignedLogDet {
  double log_abs = 0.0;  // log |det|; -inf when singular
  int sign = 0;          // -1, 0 or +1
};

/// log |det M| and the sign of det M from an LU factorization with partial
/// pivoting.
SignedLogDet signed_log_det(const Eigen::PartialPivLU<Matrix>& lu);
SignedLogDet signed_log_det(const Matrix& m);

/// LU-factorizes `m` and throws DomainError unless det m > 1e-300.
Eigen::PartialPivLU<Matrix> factor_positive_det(const Matrix& m, std::string_view what,
                                                double* log_det_out);

/// Largest |m_ij - m_ji|.
double asymmetry(const Matrix& m);

/// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const Matrix& symmetric);

/// Clamps eigenvalues in [-clamp, 0) to zero and rebuilds the matrix; throws
/// DomainError if any eigenvalue is below -clamp. Returns the input unchanged
/// when it is already PSD.
Matrix repair_psd(const Matrix& symmetric, double clamp);

}  // namespace fwsubmix
