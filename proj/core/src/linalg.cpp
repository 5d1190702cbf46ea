#include "fwsubmix/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "fwsubmix/errors.hpp"

namespace fwsubmix {

SignedLogDet signed_log_det(const Eigen::PartialPivLU<Matrix>& lu) {
  SignedLogDet out;
  const Matrix& packed = lu.matrixLU();
  int sign = static_cast<int>(lu.permutationP().determinant());
  double log_abs = 0.0;
  for (Eigen::Index i = 0; i < packed.rows(); ++i) {
    const double d = packed(i, i);
    if (d == 0.0 || !std::isfinite(d)) {
      out.log_abs = -std::numeric_limits<double>::infinity();
      out.sign = 0;
      return out;
    }
    if (d < 0.0) sign = -sign;
    log_abs += std::log(std::abs(d));
  }
  out.log_abs = log_abs;
  out.sign = sign;
  return out;
}

SignedLogDet signed_log_det(const Matrix& m) {
  return signed_log_det(Eigen::PartialPivLU<Matrix>(m));
}

Eigen::PartialPivLU<Matrix> factor_positive_det(const Matrix& m, std::string_view what,
                                                double* log_det_out) {
  Eigen::PartialPivLU<Matrix> lu(m);
  const SignedLogDet ld = signed_log_det(lu);
  // det > 1e-300  <=>  log det > log(1e-300)
  static const double kLogFloor = std::log(1e-300);
  if (ld.sign <= 0 || ld.log_abs <= kLogFloor) {
    throw DomainError(std::string(what) + ": matrix is singular or has non-positive determinant");
  }
  if (log_det_out != nullptr) *log_det_out = ld.log_abs;
  return lu;
}

double asymmetry(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.transpose()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Matrix& symmetric) {
  if (symmetric.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetric, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Matrix repair_psd(const Matrix& symmetric, double clamp) {
  if (symmetric.size() == 0) return symmetric;
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetric);
  Vector lambda = es.eigenvalues();
  if (lambda.minCoeff() >= 0.0) return symmetric;
  if (lambda.minCoeff() < -clamp) {
    throw DomainError("kernel is not positive semidefinite (min eigenvalue " +
                      std::to_string(lambda.minCoeff()) + ")");
  }
  lambda = lambda.cwiseMax(0.0);
  const Matrix& v = es.eigenvectors();
  Matrix rebuilt = v * lambda.asDiagonal() * v.transpose();
  return 0.5 * (rebuilt + rebuilt.transpose());
}

}  // namespace fwsubmix
