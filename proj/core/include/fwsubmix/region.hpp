#pragma once

#include <cstddef>
#include <variant>

#include "fwsubmix/point.hpp"
#include "fwsubmix/tolerances.hpp"

namespace fwsubmix {

/// lower <= x <= upper.
struct Box {
  Vector lower;
  Vector upper;
};

/// x in [0,1]^n with sum(x) <= budget.
struct Cardinality {
  std::size_t n = 0;
  double budget = 0.0;
};

/// x >= 0, A x <= b, x <= u with A, b, u entry-wise non-negative.
struct Polytope {
  Matrix a;
  Vector b;
  Vector u;
};

/// A solvable convex body. Immutable once built; the factory functions
/// validate the kind-specific invariants.
class FeasibleRegion {
 public:
  using Kind = std::variant<Box, Cardinality, Polytope>;

  static FeasibleRegion box(Vector lower, Vector upper);
  static FeasibleRegion unit_cube(std::size_t n);
  static FeasibleRegion cardinality(std::size_t n, double budget);
  static FeasibleRegion polytope(Matrix a, Vector b, Vector u);

  const Kind& kind() const noexcept { return kind_; }
  std::size_t dimension() const noexcept { return n_; }
  bool down_closed() const noexcept { return down_closed_; }
  /// Upper bound on max ||x||_2 over the region.
  double diameter() const noexcept { return diameter_; }

  bool is_box() const noexcept { return std::holds_alternative<Box>(kind_); }
  bool is_cardinality() const noexcept { return std::holds_alternative<Cardinality>(kind_); }
  bool is_polytope() const noexcept { return std::holds_alternative<Polytope>(kind_); }

  /// Coordinate-wise bounding box of the region.
  Vector lower_bounds() const;
  Vector upper_bounds() const;
  /// True when the region is contained in [0,1]^n.
  bool within_unit_cube() const;

  const char* kind_name() const noexcept;

 private:
  explicit FeasibleRegion(Kind kind);

  Kind kind_;
  std::size_t n_ = 0;
  bool down_closed_ = false;
  double diameter_ = 0.0;
};

struct LmoResult {
  Point vertex;
  double objective_value = 0.0;
};

/// True iff every defining inequality holds within `tol`.
bool contains(const FeasibleRegion& r, const Vector& x, double tol = kTolerances.membership);
bool contains(const FeasibleRegion& r, const Point& x, double tol = kTolerances.membership);

/// argmax_{x in r} <c, x>. Ties resolve to the lowest index.
LmoResult lmo(const FeasibleRegion& r, const Vector& c);

/// Euclidean projection. Box and Cardinality only; Polytope throws
/// UnsupportedRegionError.
Point project(const FeasibleRegion& r, const Vector& x);

bool supports_projection(const FeasibleRegion& r) noexcept;

/// max ||x||_2 over the region (exact for Box and Cardinality, ||u||_2 for
/// Polytope).
double diameter_bound(const FeasibleRegion& r);

/// A deterministic feasible point used when a solver needs an arbitrary
/// start: 0 for down-closed regions, the lower corner for boxes.
Point origin_point(const FeasibleRegion& r);

/// A deterministic point well inside the region: the box midpoint,
/// (budget/n)*1 capped at 1/2 for cardinality, and theta*u for a polytope
/// with theta = min(1, min_j b_j / (A u)_j) / 2.
Point interior_point(const FeasibleRegion& r);

}  // namespace fwsubmix
