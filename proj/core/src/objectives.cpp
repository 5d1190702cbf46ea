#include "fwsubmix/objectives.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fwsubmix/errors.hpp"
#include "fwsubmix/linalg.hpp"
#include "fwsubmix/tolerances.hpp"

namespace fwsubmix {

// ---------------------------------------------------------------- quadratic

QuadraticObjective::QuadraticObjective(Matrix h_mat, Vector h_vec, double constant)
    : h_mat_(std::move(h_mat)), h_vec_(std::move(h_vec)), constant_(constant) {
  const auto n = static_cast<std::size_t>(h_vec_.size());
  require_shape(h_mat_, n, n, "quadratic H");
  if (!h_mat_.allFinite() || !h_vec_.allFinite() || !std::isfinite(constant_)) {
    throw DomainError("quadratic coefficients must be finite");
  }
  if (n > 0 && asymmetry(h_mat_) > kTolerances.symmetry) {
    throw DomainError("quadratic H must be symmetric");
  }
}

std::shared_ptr<QuadraticObjective> QuadraticObjective::dr_submodular(Matrix h_mat, Vector h_vec,
                                                                      double constant) {
  if ((h_mat.array() > 0.0).any()) {
    throw DomainError("DR-submodular quadratic needs every entry of H <= 0");
  }
  return std::make_shared<QuadraticObjective>(std::move(h_mat), std::move(h_vec), constant);
}

std::shared_ptr<QuadraticObjective> QuadraticObjective::linear(Vector w, double constant) {
  const auto n = w.size();
  return std::make_shared<QuadraticObjective>(Matrix::Zero(n, n), std::move(w), constant);
}

std::shared_ptr<QuadraticObjective> QuadraticObjective::zero(std::size_t n) {
  return linear(Vector::Zero(static_cast<Eigen::Index>(n)), 0.0);
}

double QuadraticObjective::value(const Vector& x) const {
  require_dimension(x, dimension(), "quadratic");
  return 0.5 * x.dot(h_mat_ * x) + h_vec_.dot(x) + constant_;
}

Vector QuadraticObjective::gradient(const Vector& x) const {
  require_dimension(x, dimension(), "quadratic");
  return h_mat_ * x + h_vec_;
}

// ------------------------------------------------------------------ softmax

namespace {

Matrix validated_kernel(Matrix kernel, const char* what) {
  if (kernel.rows() != kernel.cols()) throw DimensionError(std::string(what) + " must be square");
  if (!kernel.allFinite()) throw DomainError(std::string(what) + " must be finite");
  if (kernel.size() > 0 && asymmetry(kernel) > kTolerances.symmetry) {
    throw DomainError(std::string(what) + " must be symmetric");
  }
  return kernel;
}

}  // namespace

SoftmaxExtension::SoftmaxExtension(Matrix kernel)
    : kernel_(repair_psd(validated_kernel(std::move(kernel), "softmax kernel"),
                         kTolerances.psd_clamp)) {
  shifted_ = kernel_ - Matrix::Identity(kernel_.rows(), kernel_.cols());
}

double SoftmaxExtension::value(const Vector& x) const {
  require_dimension(x, dimension(), "softmax");
  const Matrix m = x.asDiagonal() * shifted_ + Matrix::Identity(kernel_.rows(), kernel_.cols());
  double log_det = 0.0;
  factor_positive_det(m, "softmax extension", &log_det);
  return log_det;
}

Vector SoftmaxExtension::gradient(const Vector& x) const {
  require_dimension(x, dimension(), "softmax");
  const auto n = kernel_.rows();
  const Matrix m = x.asDiagonal() * shifted_ + Matrix::Identity(n, n);
  const auto lu = factor_positive_det(m, "softmax extension", nullptr);
  const Matrix inv = lu.inverse();
  Vector g(n);
  for (Eigen::Index i = 0; i < n; ++i) g[i] = shifted_.row(i).dot(inv.col(i));
  return g;
}

// --------------------------------------------------------------- similarity

SimilarityConcave::SimilarityConcave(Matrix kernel)
    : kernel_(validated_kernel(std::move(kernel), "similarity kernel")) {
  row_sums_ = kernel_.rowwise().sum();
  total_ = 0.0;
  for (Eigen::Index i = 0; i < kernel_.rows(); ++i) {
    for (Eigen::Index j = 0; j < kernel_.cols(); ++j) total_ += kernel_(i, j);
  }
}

double SimilarityConcave::value(const Vector& x) const {
  require_dimension(x, dimension(), "similarity");
  // Same summation order as total_, so constant x returns total_ exactly.
  double v = 0.0;
  for (Eigen::Index i = 0; i < kernel_.rows(); ++i) {
    for (Eigen::Index j = 0; j < kernel_.cols(); ++j) {
      const double d = x[i] - x[j];
      v += kernel_(i, j) * (1.0 - d * d);
    }
  }
  return v;
}

Vector SimilarityConcave::gradient(const Vector& x) const {
  require_dimension(x, dimension(), "similarity");
  const auto n = kernel_.rows();
  Vector g(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double acc = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) acc += kernel_(i, j) * (x[i] - x[j]);
    g[i] = -4.0 * acc;
  }
  return g;
}

// ---------------------------------------------------------------- D-optimal

DOptimalObjective::DOptimalObjective(Matrix design) : design_(std::move(design)) {
  if (design_.rows() == 0) throw DimensionError("D-optimal design needs at least one row");
  if (!design_.allFinite()) throw DomainError("D-optimal design must be finite");
}

Matrix DOptimalObjective::information(const Vector& x) const {
  // sum_i x_i Y_i^T Y_i = Y^T diag(x) Y
  return design_.transpose() * x.asDiagonal() * design_;
}

double DOptimalObjective::value(const Vector& x) const {
  require_dimension(x, dimension(), "doptimal");
  double log_det = 0.0;
  factor_positive_det(information(x), "D-optimal information matrix", &log_det);
  return log_det;
}

Vector DOptimalObjective::gradient(const Vector& x) const {
  require_dimension(x, dimension(), "doptimal");
  const auto lu = factor_positive_det(information(x), "D-optimal information matrix", nullptr);
  // Row i of Y S^{-1}, dotted with Y_i.
  const Matrix solved = lu.solve(design_.transpose());  // S^{-1} Y^T
  Vector g(design_.rows());
  for (Eigen::Index i = 0; i < design_.rows(); ++i) g[i] = design_.row(i).dot(solved.col(i));
  return g;
}

// -------------------------------------------------------------- log barrier

LogBarrierConcave::LogBarrierConcave(std::size_t n, double scale) : n_(n), scale_(scale) {
  if (!std::isfinite(scale_) || scale_ < 0.0) throw DomainError("log-barrier scale must be >= 0");
}

double LogBarrierConcave::value(const Vector& x) const {
  require_dimension(x, n_, "logbarrier");
  if ((x.array() <= 0.0).any()) throw DomainError("log barrier needs x > 0");
  return scale_ * x.array().log().sum();
}

Vector LogBarrierConcave::gradient(const Vector& x) const {
  require_dimension(x, n_, "logbarrier");
  if ((x.array() <= 0.0).any()) throw DomainError("log barrier needs x > 0");
  return (scale_ * x.array().inverse()).matrix();
}

// ------------------------------------------------------------ non-oblivious

double nonoblivious_beta(double epsilon) { return std::numbers::e * (1.0 - std::log(epsilon)); }

NonObliviousWrapper::NonObliviousWrapper(std::shared_ptr<const DifferentiableFunction> inner,
                                         double epsilon)
    : inner_(std::move(inner)) {
  if (!inner_) throw ConfigError("non-oblivious wrapper needs an inner function");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ConfigError("non-oblivious epsilon must lie in (0, 1)");
  }
  // 1/eps may be a hair above an integer through rounding (1/0.2 = 5.000...1).
  terms_ = static_cast<int>(std::ceil(1.0 / epsilon - 1e-9));
  epsilon_ = 1.0 / terms_;
}

double NonObliviousWrapper::value(const Vector& x) const {
  require_dimension(x, dimension(), "nonoblivious");
  double acc = 0.0;
  for (int j = 1; j <= terms_; ++j) {
    const double t = epsilon_ * j;
    acc += std::exp(t) * inner_->value(t * x) / t;
  }
  return epsilon_ * acc;
}

Vector NonObliviousWrapper::gradient(const Vector& x) const {
  require_dimension(x, dimension(), "nonoblivious");
  Vector acc = Vector::Zero(x.size());
  for (int j = 1; j <= terms_; ++j) {
    const double t = epsilon_ * j;
    acc += std::exp(t) * inner_->gradient(t * x);
  }
  return epsilon_ * acc;
}

// ------------------------------------------------------------------ helpers

ScaledFunction::ScaledFunction(std::shared_ptr<const DifferentiableFunction> inner, double weight)
    : inner_(std::move(inner)), weight_(weight) {
  if (!inner_) throw ConfigError("scaled function needs an inner function");
}

double ScaledFunction::value(const Vector& x) const {
  return weight_ == 0.0 ? 0.0 : weight_ * inner_->value(x);
}

Vector ScaledFunction::gradient(const Vector& x) const {
  if (weight_ == 0.0) return Vector::Zero(x.size());
  return weight_ * inner_->gradient(x);
}

TranslatedFunction::TranslatedFunction(std::shared_ptr<const DifferentiableFunction> inner,
                                       Vector offset)
    : inner_(std::move(inner)), offset_(std::move(offset)) {
  if (!inner_) throw ConfigError("translated function needs an inner function");
  require_dimension(offset_, inner_->dimension(), "translation offset");
}

double TranslatedFunction::value(const Vector& z) const { return inner_->value(offset_ + z); }

Vector TranslatedFunction::gradient(const Vector& z) const { return inner_->gradient(offset_ + z); }

}  // namespace fwsubmix
