#include "fwsubmix/region.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "fwsubmix/errors.hpp"
#include "fwsubmix/simplex.hpp"

namespace fwsubmix {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

FeasibleRegion::FeasibleRegion(Kind kind) : kind_(std::move(kind)) {
  std::visit(overloaded{
                 [this](const Box& b) {
                   n_ = static_cast<std::size_t>(b.lower.size());
                   down_closed_ = (b.lower.array() == 0.0).all();
                 },
                 [this](const Cardinality& c) {
                   n_ = c.n;
                   down_closed_ = true;
                 },
                 [this](const Polytope& p) {
                   n_ = static_cast<std::size_t>(p.a.cols());
                   down_closed_ = true;
                 },
             },
             kind_);
  diameter_ = diameter_bound(*this);
}

FeasibleRegion FeasibleRegion::box(Vector lower, Vector upper) {
  if (lower.size() != upper.size()) throw DimensionError("box bounds have different lengths");
  if (!lower.allFinite() || !upper.allFinite()) throw DomainError("box bounds must be finite");
  if ((lower.array() > upper.array()).any()) throw DomainError("box needs lower <= upper");
  return FeasibleRegion(Box{std::move(lower), std::move(upper)});
}

FeasibleRegion FeasibleRegion::unit_cube(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return box(Vector::Zero(k), Vector::Ones(k));
}

FeasibleRegion FeasibleRegion::cardinality(std::size_t n, double budget) {
  if (n == 0) throw DimensionError("cardinality region needs n >= 1");
  if (!(budget > 0.0 && budget <= static_cast<double>(n))) {
    throw DomainError("cardinality budget must lie in (0, n]");
  }
  return FeasibleRegion(Cardinality{n, budget});
}

FeasibleRegion FeasibleRegion::polytope(Matrix a, Vector b, Vector u) {
  require_dimension(b, static_cast<std::size_t>(a.rows()), "polytope b");
  require_dimension(u, static_cast<std::size_t>(a.cols()), "polytope u");
  if (!a.allFinite() || !b.allFinite() || !u.allFinite()) {
    throw DomainError("polytope data must be finite");
  }
  if ((a.array() < 0.0).any() || (b.array() < 0.0).any() || (u.array() < 0.0).any()) {
    throw DomainError("polytope needs A >= 0, b >= 0 and u >= 0");
  }
  return FeasibleRegion(Polytope{std::move(a), std::move(b), std::move(u)});
}

Vector FeasibleRegion::lower_bounds() const {
  return std::visit(overloaded{
                        [](const Box& b) -> Vector { return b.lower; },
                        [this](const auto&) -> Vector {
                          return Vector::Zero(static_cast<Eigen::Index>(n_));
                        },
                    },
                    kind_);
}

Vector FeasibleRegion::upper_bounds() const {
  return std::visit(overloaded{
                        [](const Box& b) -> Vector { return b.upper; },
                        [](const Cardinality& c) -> Vector {
                          return Vector::Constant(static_cast<Eigen::Index>(c.n),
                                                  std::min(1.0, c.budget));
                        },
                        [](const Polytope& p) -> Vector { return p.u; },
                    },
                    kind_);
}

bool FeasibleRegion::within_unit_cube() const {
  return (lower_bounds().array() >= 0.0).all() && (upper_bounds().array() <= 1.0).all();
}

const char* FeasibleRegion::kind_name() const noexcept {
  return std::visit(overloaded{
                        [](const Box&) { return "box"; },
                        [](const Cardinality&) { return "cardinality"; },
                        [](const Polytope&) { return "polytope"; },
                    },
                    kind_);
}

bool contains(const FeasibleRegion& r, const Vector& x, double tol) {
  require_dimension(x, r.dimension(), "contains");
  if (!x.allFinite()) return false;
  return std::visit(
      overloaded{
          [&](const Box& b) {
            return (x.array() >= b.lower.array() - tol).all() &&
                   (x.array() <= b.upper.array() + tol).all();
          },
          [&](const Cardinality& c) {
            return (x.array() >= -tol).all() && (x.array() <= 1.0 + tol).all() &&
                   x.sum() <= c.budget + tol;
          },
          [&](const Polytope& p) {
            return (x.array() >= -tol).all() && (x.array() <= p.u.array() + tol).all() &&
                   ((p.a * x).array() <= p.b.array() + tol).all();
          },
      },
      r.kind());
}

bool contains(const FeasibleRegion& r, const Point& x, double tol) {
  return contains(r, x.coords(), tol);
}

LmoResult lmo(const FeasibleRegion& r, const Vector& c) {
  require_dimension(c, r.dimension(), "lmo direction");
  if (!c.allFinite()) throw LmoError("LMO direction has non-finite entries");
  Vector x = std::visit(
      overloaded{
          [&](const Box& b) -> Vector {
            Vector v(c.size());
            for (Eigen::Index i = 0; i < c.size(); ++i) v[i] = c[i] > 0.0 ? b.upper[i] : b.lower[i];
            return v;
          },
          [&](const Cardinality& card) -> Vector {
            std::vector<Eigen::Index> order(static_cast<std::size_t>(c.size()));
            std::iota(order.begin(), order.end(), Eigen::Index{0});
            std::stable_sort(order.begin(), order.end(),
                             [&](Eigen::Index i, Eigen::Index j) { return c[i] > c[j]; });
            Vector v = Vector::Zero(c.size());
            double remaining = card.budget;
            for (Eigen::Index i : order) {
              if (c[i] <= 0.0 || remaining <= 0.0) break;
              const double take = std::min(1.0, remaining);
              v[i] = take;
              remaining -= take;
            }
            return v;
          },
          [&](const Polytope& p) -> Vector { return maximize_packing_lp(p.a, p.b, p.u, c).x; },
      },
      r.kind());
  const double value = c.dot(x);
  return LmoResult{Point(std::move(x)), value};
}

bool supports_projection(const FeasibleRegion& r) noexcept { return !r.is_polytope(); }

Point project(const FeasibleRegion& r, const Vector& x) {
  require_dimension(x, r.dimension(), "project");
  if (!x.allFinite()) throw DomainError("cannot project a non-finite vector");
  return std::visit(
      overloaded{
          [&](const Box& b) { return Point(x.cwiseMax(b.lower).cwiseMin(b.upper)); },
          [&](const Cardinality& c) {
            const auto capped = [&](double theta) -> Vector {
              return (x.array() - theta).cwiseMax(0.0).cwiseMin(1.0).matrix();
            };
            Vector p = capped(0.0);
            if (p.sum() <= c.budget) return Point(std::move(p));
            // sum(clamp(x - theta, 0, 1)) is non-increasing in theta; find the
            // shift that meets the budget. hi always stays feasible.
            double lo = 0.0;
            double hi = std::max(0.0, x.maxCoeff());
            while (hi - lo > kTolerances.projection) {
              const double mid = 0.5 * (lo + hi);
              if (mid <= lo || mid >= hi) break;
              if (capped(mid).sum() > c.budget) {
                lo = mid;
              } else {
                hi = mid;
              }
            }
            return Point(capped(hi));
          },
          [&](const Polytope&) -> Point {
            throw UnsupportedRegionError(
                "Euclidean projection onto a general polytope is not supported");
          },
      },
      r.kind());
}

double diameter_bound(const FeasibleRegion& r) {
  return std::visit(overloaded{
                        [](const Box& b) { return b.lower.cwiseAbs().cwiseMax(b.upper.cwiseAbs()).norm(); },
                        [](const Cardinality& c) {
                          const double k = std::min(c.budget, static_cast<double>(c.n));
                          const double whole = std::floor(k);
                          const double frac = k - whole;
                          return std::sqrt(whole + frac * frac);
                        },
                        [](const Polytope& p) { return p.u.norm(); },
                    },
                    r.kind());
}

Point origin_point(const FeasibleRegion& r) {
  if (r.down_closed()) return Point::zeros(r.dimension());
  return Point(r.lower_bounds());
}

Point interior_point(const FeasibleRegion& r) {
  return std::visit(overloaded{
                        [](const Box& b) { return Point(0.5 * (b.lower + b.upper)); },
                        [](const Cardinality& c) {
                          const double level = std::min(0.5, c.budget / static_cast<double>(c.n));
                          return Point::constant(c.n, level);
                        },
                        [](const Polytope& p) {
                          const Vector load = p.a * p.u;
                          double theta = 1.0;
                          for (Eigen::Index j = 0; j < load.size(); ++j) {
                            if (load[j] > 0.0) theta = std::min(theta, p.b[j] / load[j]);
                          }
                          return Point(0.5 * theta * p.u);
                        },
                    },
                    r.kind());
}

}  // namespace fwsubmix
