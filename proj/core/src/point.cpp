#include "fwsubmix/point.hpp"

#include <string>

#include "fwsubmix/errors.hpp"

namespace fwsubmix {

Point::Point(Vector coords) : coords_(std::move(coords)) {
  if (!all_finite(coords_)) throw DomainError("point has non-finite coordinates");
}

Point::Point(std::initializer_list<double> coords)
    : Point(Vector::Map(coords.begin(), static_cast<Eigen::Index>(coords.size()))) {}

Point Point::zeros(std::size_t n) { return Point(Vector::Zero(static_cast<Eigen::Index>(n))); }

Point Point::constant(std::size_t n, double value) {
  return Point(Vector::Constant(static_cast<Eigen::Index>(n), value));
}

void require_dimension(const Vector& v, std::size_t n, std::string_view what) {
  if (static_cast<std::size_t>(v.size()) != n) {
    throw DimensionError(std::string(what) + ": expected length " + std::to_string(n) +
                         ", got " + std::to_string(v.size()));
  }
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, std::string_view what) {
  if (static_cast<std::size_t>(m.rows()) != rows || static_cast<std::size_t>(m.cols()) != cols) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

bool all_finite(const Vector& v) { return v.allFinite(); }

}  // namespace fwsubmix
