#pragma once

#include <cstddef>
#include <initializer_list>
#include <string_view>

#include <Eigen/Core>

namespace fwsubmix {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// A finite point in R^n: the iterate and solution type of every solver.
/// Construction rejects NaN/Inf coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(Vector coords);
  Point(std::initializer_list<double> coords);

  static Point zeros(std::size_t n);
  static Point constant(std::size_t n, double value);

  const Vector& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(coords_.size()); }
  double operator[](std::size_t i) const { return coords_[static_cast<Eigen::Index>(i)]; }

  bool operator==(const Point& other) const {
    return coords_.size() == other.coords_.size() && coords_ == other.coords_;
  }

 private:
  Vector coords_;
};

/// Throws DimensionError unless `v` has length `n`.
void require_dimension(const Vector& v, std::size_t n, std::string_view what);

/// Throws DimensionError unless `m` is rows x cols.
void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, std::string_view what);

bool all_finite(const Vector& v);

}  // namespace fwsubmix
