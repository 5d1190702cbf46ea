#include <cmath>

#include <gtest/gtest.h>

#include "fwsubmix/errors.hpp"
#include "fwsubmix/region.hpp"
#include "fwsubmix/rng.hpp"
#include "fwsubmix/simplex.hpp"
#include "fwsubmix/verify.hpp"
#include "oracles/oracles.hpp"

using namespace fwsubmix;

namespace {

Vector vec(std::initializer_list<double> v) { return Point(v).coords(); }

Matrix row(std::initializer_list<double> v) {
  Matrix m(1, static_cast<Eigen::Index>(v.size()));
  m.row(0) = vec(v).transpose();
  return m;
}

FeasibleRegion random_polytope(CounterRng& rng, Eigen::Index n, Eigen::Index m) {
  Matrix a(m, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // Dyadic entries keep the data rational; a few zeros exercise
      // unbounded-looking directions capped by u.
      a(i, j) = std::floor(rng.uniform(0.0, 9.0)) / 4.0;
    }
  }
  Vector b(m), u(n);
  for (Eigen::Index i = 0; i < m; ++i) b[i] = std::floor(rng.uniform(1.0, 9.0)) / 4.0;
  for (Eigen::Index j = 0; j < n; ++j) u[j] = std::floor(rng.uniform(1.0, 9.0)) / 4.0;
  return FeasibleRegion::polytope(a, b, u);
}

Vector random_direction(CounterRng& rng, Eigen::Index n) {
  Vector c(n);
  for (Eigen::Index i = 0; i < n; ++i) c[i] = rng.uniform(-1.0, 1.0);
  return c;
}

}  // namespace

// -------------------------------------------------------------- contains

TEST(Contains, BoxInterior) {
  EXPECT_TRUE(contains(FeasibleRegion::unit_cube(2), vec({0.5, 0.5})));
}

TEST(Contains, CardinalityOverBudget) {
  EXPECT_FALSE(contains(FeasibleRegion::cardinality(2, 1.0), vec({0.7, 0.7})));
}

TEST(Contains, PolytopeBoundaryPlusTolerance) {
  const auto p = FeasibleRegion::polytope(row({1, 1}), vec({1}), vec({1, 1}));
  EXPECT_FALSE(contains(p, vec({0.5, 0.5 + 2e-9}), 1e-9));
  EXPECT_TRUE(contains(p, vec({0.5, 0.5 + 0.5e-9}), 1e-9));
}

TEST(Contains, DimensionMismatchThrows) {
  EXPECT_THROW(contains(FeasibleRegion::unit_cube(2), vec({0.5})), DimensionError);
}

TEST(Region, FactoriesValidateInvariants) {
  EXPECT_THROW(FeasibleRegion::box(vec({1}), vec({0})), DomainError);
  EXPECT_THROW(FeasibleRegion::cardinality(3, 0.0), DomainError);
  EXPECT_THROW(FeasibleRegion::cardinality(3, 3.5), DomainError);
  EXPECT_THROW(FeasibleRegion::polytope(row({-1, 1}), vec({1}), vec({1, 1})), DomainError);
  EXPECT_THROW(FeasibleRegion::polytope(row({1, 1}), vec({-1}), vec({1, 1})), DomainError);
}

TEST(Region, DownClosedFlag) {
  EXPECT_TRUE(FeasibleRegion::unit_cube(3).down_closed());
  EXPECT_FALSE(FeasibleRegion::box(vec({1, 1}), vec({2, 2})).down_closed());
  EXPECT_TRUE(FeasibleRegion::cardinality(3, 1.0).down_closed());
  EXPECT_TRUE(FeasibleRegion::polytope(row({1, 1}), vec({1}), vec({1, 1})).down_closed());
}

// ------------------------------------------------------------------- lmo

TEST(Lmo, BoxSignRuleTiesToLower) {
  const auto r = lmo(FeasibleRegion::unit_cube(3), vec({1, -2, 0}));
  EXPECT_EQ(r.vertex, Point({1, 0, 0}));
  EXPECT_DOUBLE_EQ(r.objective_value, 1.0);
}

TEST(Lmo, CardinalityTopOne) {
  const auto r = lmo(FeasibleRegion::cardinality(3, 1.0), vec({3, 2, 1}));
  EXPECT_EQ(r.vertex, Point({1, 0, 0}));
  EXPECT_DOUBLE_EQ(r.objective_value, 3.0);
}

TEST(Lmo, PolytopeFaceReturnsLowestIndexVertex) {
  const auto p = FeasibleRegion::polytope(row({1, 1}), vec({1}), vec({1, 1}));
  const auto r = lmo(p, vec({1, 1}));
  EXPECT_NEAR(r.objective_value, 1.0, 1e-12);
  EXPECT_EQ(r.vertex, Point({1, 0}));
  const auto brute = oracles::enumerate_packing_vertices(row({1, 1}), vec({1}), vec({1, 1}), vec({1, 1}));
  EXPECT_NEAR(brute.value, 1.0, 1e-12);
}

TEST(Lmo, CardinalityFractionalRemainder) {
  const auto r = lmo(FeasibleRegion::cardinality(4, 2.5), vec({4, 3, 2, -1}));
  EXPECT_EQ(r.vertex, Point({1, 1, 0.5, 0}));
  EXPECT_DOUBLE_EQ(r.objective_value, 8.0);
}

TEST(Lmo, CardinalityStopsAtNonPositiveCoefficients) {
  const auto r = lmo(FeasibleRegion::cardinality(3, 2.0), vec({0, 1, -1}));
  EXPECT_EQ(r.vertex, Point({0, 1, 0}));
}

TEST(Lmo, ShiftedBox) {
  const auto r = lmo(FeasibleRegion::box(vec({1, 1}), vec({2, 2})), vec({1, -1}));
  EXPECT_EQ(r.vertex, Point({2, 1}));
  EXPECT_DOUBLE_EQ(r.objective_value, 1.0);
}

TEST(Lmo, MatchesVertexEnumerationOnRandomPolytopes) {
  CounterRng rng(2024, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.uniform(0.0, 6.0));
    const Eigen::Index m = 1 + static_cast<Eigen::Index>(rng.uniform(0.0, 5.0));
    const FeasibleRegion r = random_polytope(rng, n, m);
    const Polytope& p = std::get<Polytope>(r.kind());
    const Vector c = random_direction(rng, n);
    const auto got = lmo(r, c);
    const auto want = oracles::enumerate_packing_vertices(p.a, p.b, p.u, c);
    ASSERT_NEAR(got.objective_value, want.value, 1e-8) << "trial " << trial;
    ASSERT_TRUE(contains(r, got.vertex, 1e-9));
    ASSERT_NEAR(c.dot(got.vertex.coords()), got.objective_value, 1e-12);
  }
}

TEST(Lmo, BoxAndCardinalityMatchVertexEnumeration) {
  CounterRng rng(77, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng.uniform(0.0, 6.0));
    const Vector c = random_direction(rng, n);
    const double budget = rng.uniform(0.25, static_cast<double>(n));
    const auto card = lmo(FeasibleRegion::cardinality(static_cast<std::size_t>(n), budget), c);
    const auto card_brute = oracles::enumerate_packing_vertices(
        Matrix::Ones(1, n), Vector::Constant(1, budget), Vector::Ones(n), c);
    EXPECT_NEAR(card.objective_value, card_brute.value, 1e-8);

    const Vector u = Vector::Constant(n, 0.5) + random_direction(rng, n).cwiseAbs();
    const auto box = lmo(FeasibleRegion::box(Vector::Zero(n), u), c);
    const auto box_brute = oracles::enumerate_packing_vertices(Matrix(0, n), Vector(0), u, c);
    EXPECT_NEAR(box.objective_value, box_brute.value, 1e-8);
  }
}

TEST(Simplex, ReportsPivotsAndFeasiblePoint) {
  Matrix a(2, 3);
  a << 1, 2, 1, 3, 1, 2;
  const auto sol = maximize_packing_lp(a, vec({4, 6}), vec({2, 2, 2}), vec({1, 1, 1}));
  EXPECT_GT(sol.pivots, 0);
  const auto brute = oracles::enumerate_packing_vertices(a, vec({4, 6}), vec({2, 2, 2}), vec({1, 1, 1}));
  EXPECT_NEAR(sol.value, brute.value, 1e-10);
}

TEST(Simplex, ZeroObjectiveStaysAtOrigin) {
  const auto sol = maximize_packing_lp(row({1, 1}), vec({1}), vec({1, 1}), vec({0, -1}));
  EXPECT_EQ(sol.x, Vector::Zero(2));
  EXPECT_EQ(sol.value, 0.0);
}

// --------------------------------------------------------------- project

TEST(Project, BoxClamp) {
  EXPECT_EQ(project(FeasibleRegion::unit_cube(2), vec({1.5, -0.2})), Point({1, 0}));
}

TEST(Project, CardinalitySymmetric) {
  const Point p = project(FeasibleRegion::cardinality(2, 1.0), vec({1, 1}));
  EXPECT_NEAR(p[0], 0.5, 1e-9);
  EXPECT_NEAR(p[1], 0.5, 1e-9);
}

TEST(Project, CardinalityShift) {
  const Point p = project(FeasibleRegion::cardinality(2, 1.0), vec({0.9, 0.3}));
  EXPECT_NEAR(p[0], 0.8, 1e-9);
  EXPECT_NEAR(p[1], 0.2, 1e-9);
}

TEST(Project, PolytopeUnsupported) {
  const auto p = FeasibleRegion::polytope(row({1, 1}), vec({1}), vec({1, 1}));
  EXPECT_FALSE(supports_projection(p));
  EXPECT_THROW(project(p, vec({0.2, 0.2})), UnsupportedRegionError);
}

TEST(Project, VariationalInequality) {
  CounterRng rng(9, 0);
  const FeasibleRegion regions[] = {
      FeasibleRegion::box(vec({0, -1, 0.5}), vec({1, 1, 2})),
      FeasibleRegion::cardinality(5, 1.7),
      FeasibleRegion::cardinality(4, 4.0),
  };
  for (const auto& r : regions) {
    const auto n = static_cast<Eigen::Index>(r.dimension());
    for (int t = 0; t < 200; ++t) {
      Vector x(n);
      for (Eigen::Index i = 0; i < n; ++i) x[i] = rng.uniform(-2.0, 3.0);
      const Vector p = project(r, x).coords();
      ASSERT_TRUE(contains(r, p, 1e-9));
      for (int k = 0; k < 50; ++k) {
        const Vector z = sample_feasible(r, rng);
        ASSERT_LE((x - p).dot(z - p), 1e-8);
      }
    }
  }
}

// -------------------------------------------------------------- diameter

TEST(Diameter, Examples) {
  EXPECT_DOUBLE_EQ(diameter_bound(FeasibleRegion::unit_cube(4)), 2.0);
  EXPECT_DOUBLE_EQ(diameter_bound(FeasibleRegion::cardinality(9, 4.0)), 2.0);
  EXPECT_DOUBLE_EQ(diameter_bound(FeasibleRegion::polytope(Matrix::Ones(1, 3), vec({5}), vec({1, 1, 1}))),
                   std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(diameter_bound(FeasibleRegion::box(vec({-3, 1}), vec({1, 2}))), std::sqrt(13.0));
}

TEST(Diameter, CardinalityFractionalBudget) {
  EXPECT_NEAR(diameter_bound(FeasibleRegion::cardinality(5, 2.5)), std::sqrt(2.25), 1e-15);
}

// ----------------------------------------------------------- down-closed

TEST(DownClosed, FeasibleSubVectorsStayFeasible) {
  CounterRng rng(12, 0);
  const FeasibleRegion regions[] = {
      FeasibleRegion::unit_cube(4),
      FeasibleRegion::cardinality(4, 1.5),
      random_polytope(rng, 4, 3),
  };
  for (const auto& r : regions) {
    ASSERT_TRUE(r.down_closed());
    ASSERT_TRUE(contains(r, Vector::Zero(4)));
    for (int t = 0; t < 200; ++t) {
      const Vector x = sample_feasible(r, rng);
      ASSERT_TRUE(contains(r, x));
      Vector y = x;
      for (Eigen::Index i = 0; i < 4; ++i) y[i] = rng.uniform(0.0, 1.0) * x[i];
      ASSERT_TRUE(contains(r, y));
    }
  }
}

TEST(InteriorPoint, IsFeasible) {
  CounterRng rng(13, 0);
  const FeasibleRegion p = random_polytope(rng, 5, 4);
  EXPECT_TRUE(contains(p, interior_point(p)));
  EXPECT_EQ(interior_point(FeasibleRegion::cardinality(400, 25.0)), Point::constant(400, 0.0625));
  EXPECT_EQ(interior_point(FeasibleRegion::box(vec({1, 1}), vec({2, 2}))), Point({1.5, 1.5}));
}
