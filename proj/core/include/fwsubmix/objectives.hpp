#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "fwsubmix/objective.hpp"

namespace fwsubmix {

/// G(x) = 1/2 x^T H x + h^T x + c with H symmetric.
/// DR-submodular iff every entry of H is <= 0; concave iff H is NSD.
class QuadraticObjective final : public DifferentiableFunction {
 public:
  QuadraticObjective(Matrix h_mat, Vector h_vec, double constant);

  /// Same, additionally rejecting H with a positive entry.
  static std::shared_ptr<QuadraticObjective> dr_submodular(Matrix h_mat, Vector h_vec,
                                                           double constant);
  /// <w, x> + constant.
  static std::shared_ptr<QuadraticObjective> linear(Vector w, double constant = 0.0);
  static std::shared_ptr<QuadraticObjective> zero(std::size_t n);

  std::size_t dimension() const override { return static_cast<std::size_t>(h_vec_.size()); }
  double value(const Vector& x) const override;
  Vector gradient(const Vector& x) const override;
  std::string name() const override { return "quadratic"; }

  const Matrix& hessian() const noexcept { return h_mat_; }
  const Vector& linear_term() const noexcept { return h_vec_; }
  double constant() const noexcept { return constant_; }

 private:
  Matrix h_mat_;
  Vector h_vec_;
  double constant_;
};

/// Softmax extension of a DPP with kernel L:
///   G(x) = log det(diag(x)(L - I) + I).
/// The kernel is checked symmetric PSD; tiny negative eigenvalues left by
/// floating-point assembly are clamped.
class SoftmaxExtension final : public DifferentiableFunction {
 public:
  explicit SoftmaxExtension(Matrix kernel);

  std::size_t dimension() const override { return static_cast<std::size_t>(kernel_.rows()); }
  double value(const Vector& x) const override;
  /// grad_i = [(L - I) M(x)^{-1}]_ii
  Vector gradient(const Vector& x) const override;
  std::string name() const override { return "softmax"; }

  const Matrix& kernel() const noexcept { return kernel_; }

 private:
  Matrix kernel_;
  Matrix shifted_;  // L - I
};

/// C(x) = sum_ij L_ij (1 - (x_i - x_j)^2) for a symmetric L. Concave
/// whenever L >= 0 entry-wise.
class SimilarityConcave final : public DifferentiableFunction {
 public:
  explicit SimilarityConcave(Matrix kernel);

  std::size_t dimension() const override { return static_cast<std::size_t>(kernel_.rows()); }
  double value(const Vector& x) const override;
  /// grad_i = -4 sum_j L_ij (x_i - x_j)
  Vector gradient(const Vector& x) const override;
  std::string name() const override { return "similarity"; }

  const Matrix& kernel() const noexcept { return kernel_; }

 private:
  Matrix kernel_;
  Vector row_sums_;
  double total_;
};

/// D-optimal design: G(x) = log det(sum_i x_i Y_i^T Y_i) where Y_i is the
/// i-th row of `design`.
class DOptimalObjective final : public DifferentiableFunction {
 public:
  explicit DOptimalObjective(Matrix design);

  std::size_t dimension() const override { return static_cast<std::size_t>(design_.rows()); }
  double value(const Vector& x) const override;
  /// grad_i = Y_i S(x)^{-1} Y_i^T
  Vector gradient(const Vector& x) const override;
  std::string name() const override { return "doptimal"; }

  const Matrix& design() const noexcept { return design_; }

 private:
  Matrix information(const Vector& x) const;

  Matrix design_;
};

/// C(x) = scale * sum_i log x_i on x > 0.
class LogBarrierConcave final : public DifferentiableFunction {
 public:
  LogBarrierConcave(std::size_t n, double scale);

  std::size_t dimension() const override { return n_; }
  double value(const Vector& x) const override;
  Vector gradient(const Vector& x) const override;
  std::string name() const override { return "logbarrier"; }

  double scale() const noexcept { return scale_; }

 private:
  std::size_t n_;
  double scale_;
};

/// Non-oblivious surrogate of a monotone G:
///   Gbar(x) = eps * sum_{j=1}^{1/eps} e^{eps j} G(eps j x) / (eps j)
///   grad Gbar(x) = eps * sum_{j=1}^{1/eps} e^{eps j} grad G(eps j x)
/// eps is shrunk to 1/ceil(1/eps) so that 1/eps is an integer; one gradient
/// of Gbar costs 1/eps gradients of G.
class NonObliviousWrapper final : public DifferentiableFunction {
 public:
  NonObliviousWrapper(std::shared_ptr<const DifferentiableFunction> inner, double epsilon);

  std::size_t dimension() const override { return inner_->dimension(); }
  double value(const Vector& x) const override;
  Vector gradient(const Vector& x) const override;
  std::string name() const override { return "nonoblivious(" + inner_->name() + ")"; }

  double epsilon() const noexcept { return epsilon_; }
  int terms() const noexcept { return terms_; }
  const DifferentiableFunction& inner() const noexcept { return *inner_; }

 private:
  std::shared_ptr<const DifferentiableFunction> inner_;
  double epsilon_;
  int terms_;
};

/// weight * f(x).
class ScaledFunction final : public DifferentiableFunction {
 public:
  ScaledFunction(std::shared_ptr<const DifferentiableFunction> inner, double weight);

  std::size_t dimension() const override { return inner_->dimension(); }
  double value(const Vector& x) const override;
  Vector gradient(const Vector& x) const override;
  std::string name() const override { return inner_->name(); }

 private:
  std::shared_ptr<const DifferentiableFunction> inner_;
  double weight_;
};

/// z -> f(offset + z). Used to map a shifted box onto one with a zero corner.
class TranslatedFunction final : public DifferentiableFunction {
 public:
  TranslatedFunction(std::shared_ptr<const DifferentiableFunction> inner, Vector offset);

  std::size_t dimension() const override { return inner_->dimension(); }
  double value(const Vector& z) const override;
  Vector gradient(const Vector& z) const override;
  std::string name() const override { return inner_->name(); }

  const Vector& offset() const noexcept { return offset_; }

 private:
  std::shared_ptr<const DifferentiableFunction> inner_;
  Vector offset_;
};

/// e (1 - ln eps): the bound Gbar(x) <= beta(eps) G(x) for monotone G.
double nonoblivious_beta(double epsilon);

}  // namespace fwsubmix
