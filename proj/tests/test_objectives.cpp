#include <cmath>
#include <memory>
#include <numbers>

#include <gtest/gtest.h>

#include "fwsubmix/errors.hpp"
#include "fwsubmix/generators.hpp"
#include "fwsubmix/objectives.hpp"
#include "fwsubmix/rng.hpp"
#include "fwsubmix/verify.hpp"
#include "oracles/oracles.hpp"

using namespace fwsubmix;

namespace {

Vector uniform_vector(CounterRng& rng, Eigen::Index n, double lo, double hi) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = rng.uniform(lo, hi);
  return v;
}

Matrix seeded_kernel(std::size_t n, std::uint64_t seed, double sigma) {
  CounterRng rng(seed, 9);
  std::vector<PlanePoint> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({rng.uniform01(), rng.uniform01()});
  return make_gaussian_kernel(pts, sigma);
}

double fd_error(const DifferentiableFunction& f, const Vector& x) {
  const Vector numeric =
      oracles::five_point_gradient([&f](const Vector& v) { return f.value(v); }, x, 1e-4);
  return relative_error(f.gradient(x), numeric);
}

// Antitone gradients on 200 random pairs lo <= a <= b <= hi.
double worst_antitone_violation(const DifferentiableFunction& g, double lo, double hi,
                                std::uint64_t seed) {
  CounterRng rng(seed, 21);
  const auto n = static_cast<Eigen::Index>(g.dimension());
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const Vector a = uniform_vector(rng, n, lo, hi);
    Vector b = a;
    for (Eigen::Index i = 0; i < n; ++i) b[i] = rng.uniform(a[i], hi);
    worst = std::max(worst, (g.gradient(b) - g.gradient(a)).maxCoeff());
  }
  return worst;
}

double worst_concavity_violation(const DifferentiableFunction& c, double lo, double hi,
                                 std::uint64_t seed) {
  CounterRng rng(seed, 22);
  const auto n = static_cast<Eigen::Index>(c.dimension());
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Vector x = uniform_vector(rng, n, lo, hi);
    const Vector y = uniform_vector(rng, n, lo, hi);
    const double t = rng.uniform01();
    const double gap = t * c.value(x) + (1 - t) * c.value(y) - c.value(t * x + (1 - t) * y);
    worst = std::max(worst, gap);
  }
  return worst;
}

}  // namespace

// ------------------------------------------------------------- quadratic

TEST(Quadratic, LinearCase) {
  Vector h(2);
  h << 1, 2;
  QuadraticObjective q(Matrix::Zero(2, 2), h, 0.0);
  const Vector x = Vector::Ones(2);
  EXPECT_DOUBLE_EQ(q.value(x), 3.0);
  EXPECT_EQ(q.gradient(x), h);
}

TEST(Quadratic, DiagonalCase) {
  QuadraticObjective q(-2.0 * Matrix::Identity(2, 2), Vector::Zero(2), 0.0);
  const Vector x = Vector::Ones(2);
  EXPECT_DOUBLE_EQ(q.value(x), -2.0);
  EXPECT_DOUBLE_EQ(q.gradient(x)[0], -2.0);
  EXPECT_DOUBLE_EQ(q.gradient(x)[1], -2.0);
}

TEST(Quadratic, SeededInstanceGradientMatchesFiniteDifferences) {
  const QpInstance inst = make_qp_instance(8, 4, 0);
  CounterRng rng(0, 30);
  for (int k = 0; k < 20; ++k) {
    const Vector x = uniform_vector(rng, 8, 0.0, 1.0);
    EXPECT_LE(fd_error(*inst.g, x), 1e-6);
    EXPECT_LE(fd_error(*inst.c, x), 1e-6);
  }
}

TEST(Quadratic, RejectsAsymmetricAndPositiveEntries) {
  Matrix asym(2, 2);
  asym << 0, 1, 0, 0;
  EXPECT_THROW(QuadraticObjective(asym, Vector::Zero(2), 0.0), DomainError);
  Matrix pos(2, 2);
  pos << 0, 1, 1, 0;
  EXPECT_THROW(QuadraticObjective::dr_submodular(pos, Vector::Zero(2), 0.0), DomainError);
}

TEST(Quadratic, DimensionMismatch) {
  QuadraticObjective q(Matrix::Zero(2, 2), Vector::Zero(2), 0.0);
  ObjectivePair obj(std::make_shared<QuadraticObjective>(q), QuadraticObjective::zero(2));
  EXPECT_THROW(evaluate_F(obj, Vector::Zero(3)), DimensionError);
}

// --------------------------------------------------------------- softmax

TEST(Softmax, ZeroPointIsLogDetIdentity) {
  SoftmaxExtension s(seeded_kernel(4, 1, 0.3));
  EXPECT_NEAR(s.value(Vector::Zero(4)), 0.0, 1e-15);
}

TEST(Softmax, OnesPointIsLogDetKernel) {
  const Matrix l = seeded_kernel(4, 1, 0.3);
  SoftmaxExtension s(l);
  EXPECT_NEAR(s.value(Vector::Ones(4)), std::log(l.determinant()), 1e-10);
}

TEST(Softmax, GradientMatchesFiniteDifferences) {
  SoftmaxExtension s(seeded_kernel(3, 2, 0.4));
  CounterRng rng(2, 31);
  for (int k = 0; k < 20; ++k) EXPECT_LE(fd_error(s, uniform_vector(rng, 3, 0.05, 0.95)), 1e-4);
}

TEST(Softmax, RejectsNonPsdKernel) {
  Matrix l(2, 2);
  l << 1, 2, 2, 1;
  EXPECT_THROW((SoftmaxExtension(l)), DomainError);
}

TEST(Softmax, ClampsRoundingLevelNegativeEigenvalues) {
  Matrix l = Matrix::Ones(3, 3);
  l(0, 0) -= 5e-10;
  EXPECT_NO_THROW((SoftmaxExtension(l)));
}

// ------------------------------------------------------------ similarity

TEST(Similarity, ConstantVectorGivesKernelSumAndZeroGradient) {
  const Matrix l = seeded_kernel(5, 3, 0.3);
  SimilarityConcave c(l);
  const Vector x = Vector::Constant(5, 0.37);
  EXPECT_DOUBLE_EQ(c.value(x), c.value(Vector::Constant(5, 0.9)));
  EXPECT_NEAR(c.value(x), l.sum(), 1e-12);
  EXPECT_EQ(c.gradient(x), Vector::Zero(5));
}

TEST(Similarity, TwoPointExpansion) {
  SimilarityConcave c(Matrix::Ones(2, 2));
  Vector x(2);
  x << 1, 0;
  EXPECT_DOUBLE_EQ(c.value(x), 2.0);
}

TEST(Similarity, GradientMatchesFiniteDifferences) {
  SimilarityConcave c(seeded_kernel(5, 4, 0.3));
  CounterRng rng(4, 32);
  for (int k = 0; k < 20; ++k) EXPECT_LE(fd_error(c, uniform_vector(rng, 5, 0.0, 1.0)), 1e-6);
}

// --------------------------------------------------------------- doptimal

TEST(DOptimal, IdentityDesignIsSumOfLogs) {
  DOptimalObjective d(Matrix::Identity(3, 3));
  Vector x(3);
  x << 1.5, 2.0, 1.25;
  EXPECT_NEAR(d.value(x), std::log(1.5) + std::log(2.0) + std::log(1.25), 1e-12);
  const Vector g = d.gradient(x);
  for (Eigen::Index i = 0; i < 3; ++i) EXPECT_NEAR(g[i], 1.0 / x[i], 1e-12);
}

TEST(DOptimal, IdentityDesignAtOnesIsZero) {
  DOptimalObjective d(Matrix::Identity(4, 4));
  EXPECT_NEAR(d.value(Vector::Ones(4)), 0.0, 1e-15);
}

TEST(DOptimal, SeededGaussianGradientMatchesFiniteDifferences) {
  DOptimalObjective d(make_gaussian_design(8, 3));
  CounterRng rng(3, 33);
  for (int k = 0; k < 20; ++k) EXPECT_LE(fd_error(d, uniform_vector(rng, 8, 1.0, 2.0)), 1e-4);
}

TEST(DOptimal, SingularInformationMatrixIsDomainError) {
  DOptimalObjective d(make_gaussian_design(3, 0));
  EXPECT_THROW(d.value(Vector::Zero(3)), DomainError);
  EXPECT_THROW(d.gradient(Vector::Zero(3)), DomainError);
}

TEST(LogBarrier, ValueGradientAndDomain) {
  LogBarrierConcave c(2, 0.1);
  Vector x(2);
  x << 1.0, 2.0;
  EXPECT_NEAR(c.value(x), 0.1 * std::log(2.0), 1e-15);
  EXPECT_NEAR(c.gradient(x)[1], 0.05, 1e-15);
  EXPECT_THROW(c.value(Vector::Zero(2)), DomainError);
}

// ----------------------------------------------------------- non-oblivious

TEST(NonOblivious, TwoTermLinearCase) {
  auto g = QuadraticObjective::linear(Vector::Ones(1));
  NonObliviousWrapper w(g, 0.5);
  Vector x(1);
  x << 0.8;
  EXPECT_NEAR(w.value(x), 0.8 * (std::exp(0.5) + std::numbers::e) / 2.0, 1e-14);
  EXPECT_EQ(w.terms(), 2);
}

TEST(NonOblivious, ZeroFunction) {
  NonObliviousWrapper w(QuadraticObjective::zero(3), 0.25);
  EXPECT_EQ(w.value(Vector::Constant(3, 0.5)), 0.0);
  EXPECT_EQ(w.gradient(Vector::Constant(3, 0.5)), Vector::Zero(3));
}

TEST(NonOblivious, EpsilonRoundsDownToReciprocalInteger) {
  NonObliviousWrapper w(QuadraticObjective::zero(1), 0.3);
  EXPECT_EQ(w.terms(), 4);
  EXPECT_DOUBLE_EQ(w.epsilon(), 0.25);
  EXPECT_THROW(NonObliviousWrapper(QuadraticObjective::zero(1), 1.0), ConfigError);
}

TEST(NonOblivious, BoundedByBetaTimesG) {
  StructuredQpSpec spec;
  spec.n = 4;
  spec.seed = 5;
  const QpInstance inst = make_structured_qp(spec);
  NonObliviousWrapper w(inst.g, 0.25);
  const double beta = nonoblivious_beta(0.25);
  EXPECT_NEAR(beta, std::numbers::e * (1.0 - std::log(0.25)), 1e-15);
  CounterRng rng(5, 34);
  for (int k = 0; k < 100; ++k) {
    const Vector x = sample_feasible(inst.region, rng);
    EXPECT_LE(w.value(x), beta * inst.g->value(x) + 1e-12);
  }
}

TEST(NonOblivious, GradientMatchesFiniteDifferences) {
  StructuredQpSpec spec;
  spec.seed = 6;
  NonObliviousWrapper w(make_structured_qp(spec).g, 0.2);
  CounterRng rng(6, 35);
  for (int k = 0; k < 20; ++k) EXPECT_LE(fd_error(w, uniform_vector(rng, 4, 0.0, 1.0)), 1e-6);
}

TEST(NonOblivious, SmoothnessAtMostETimesInner) {
  StructuredQpSpec spec;
  spec.seed = 7;
  const QpInstance inst = make_structured_qp(spec);
  NonObliviousWrapper w(inst.g, 0.25);
  const double inner = estimate_smoothness(*inst.g, inst.region, 500, 7);
  const double outer = estimate_smoothness(w, inst.region, 500, 7);
  EXPECT_LE(outer, std::numbers::e * inner + 1e-9);
}

// ---------------------------------------------------------- wrappers

TEST(Wrappers, ScaledAndTranslated) {
  auto q = std::make_shared<QuadraticObjective>(-2.0 * Matrix::Identity(2, 2), Vector::Ones(2), 1.0);
  ScaledFunction s(q, 0.5);
  const Vector x = Vector::Constant(2, 0.3);
  EXPECT_DOUBLE_EQ(s.value(x), 0.5 * q->value(x));
  TranslatedFunction t(q, Vector::Ones(2));
  EXPECT_DOUBLE_EQ(t.value(x), q->value(x + Vector::Ones(2)));
  EXPECT_EQ(t.gradient(x), q->gradient(x + Vector::Ones(2)));
}

// ------------------------------------------------------------ generators

TEST(QpGenerator, SameSeedIsBitIdentical) {
  const QpInstance a = make_qp_instance(8, 4, 17);
  const QpInstance b = make_qp_instance(8, 4, 17);
  EXPECT_EQ(a.g->hessian(), b.g->hessian());
  EXPECT_EQ(a.g->linear_term(), b.g->linear_term());
  EXPECT_EQ(a.c->hessian(), b.c->hessian());
  EXPECT_EQ(std::get<Polytope>(a.region.kind()).a, std::get<Polytope>(b.region.kind()).a);
  EXPECT_NE(make_qp_instance(8, 4, 18).g->hessian(), a.g->hessian());
}

TEST(QpGenerator, EntryRanges) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const QpInstance inst = make_qp_instance(8, 4, seed);
    const Matrix& h = inst.g->hessian();
    EXPECT_LE(h.maxCoeff(), 0.0);
    EXPECT_GE(h.minCoeff(), -1.0);
    EXPECT_EQ(h, h.transpose());
    const Polytope& p = std::get<Polytope>(inst.region.kind());
    EXPECT_GE(p.a.minCoeff(), 0.01);
    EXPECT_LT(p.a.maxCoeff(), 1.01);
    EXPECT_EQ(p.b, Vector::Ones(4));
    for (Eigen::Index i = 0; i < 8; ++i) EXPECT_DOUBLE_EQ(p.u[i], (p.b.array() / p.a.col(i).array()).minCoeff());
    EXPECT_TRUE(inst.g->linear_term().isApprox(-0.2 * h.transpose() * p.u));
    EXPECT_DOUBLE_EQ(inst.g->constant(), 10.0);
    // C = x^T D x / 20 with D = -R R^T negative semidefinite.
    Eigen::SelfAdjointEigenSolver<Matrix> eig(inst.c->hessian());
    EXPECT_LE(eig.eigenvalues().maxCoeff(), 1e-12);
  }
}

TEST(QpGenerator, NonNegativeAtRandomFeasiblePoints) {
  const QpInstance inst = make_qp_instance(8, 4, 0);
  EXPECT_TRUE(inst.g_nonneg_verified);
  CounterRng rng(0, 40);
  const Polytope& p = std::get<Polytope>(inst.region.kind());
  for (int k = 0; k < 1000; ++k) {
    Vector x = uniform_vector(rng, 8, 0.0, 1.0).cwiseProduct(p.u);
    const double load = (p.a * x).maxCoeff();
    if (load > 1.0) x /= load;
    ASSERT_GE(inst.g->value(x), 0.0);
  }
}

TEST(StructuredQp, FlagsMatchConstruction) {
  for (bool gm : {true, false}) {
    for (bool cm : {true, false}) {
      StructuredQpSpec spec;
      spec.g_monotone = gm;
      spec.c_monotone = cm;
      spec.seed = 3;
      const QpInstance inst = make_structured_qp(spec);
      EXPECT_EQ(inst.flags.g_monotone, gm);
      EXPECT_EQ(inst.flags.c_monotone, cm);
      EXPECT_TRUE(inst.region.within_unit_cube());
      // Monotone parts have a non-negative gradient on the region.
      CounterRng rng(3, 41);
      for (int k = 0; k < 200; ++k) {
        const Vector x = sample_feasible(inst.region, rng);
        EXPECT_GE(inst.g->value(x), -1e-12);
        EXPECT_GE(inst.c->value(x), -1e-12);
        if (gm) {
          EXPECT_GE(inst.g->gradient(x).minCoeff(), -1e-12);
        }
        if (cm) {
          EXPECT_GE(inst.c->gradient(x).minCoeff(), -1e-12);
        }
      }
    }
  }
}

// ---------------------------------------------------------------- kernel

TEST(GaussianKernel, UnitDiagonalAndSymmetric) {
  const Matrix l = seeded_kernel(10, 8, 0.2);
  for (Eigen::Index i = 0; i < 10; ++i) EXPECT_EQ(l(i, i), 1.0);
  EXPECT_EQ(l, l.transpose());
}

TEST(GaussianKernel, DistanceSigmaRootTwoGivesInverseE) {
  const double sigma = 0.3;
  const Matrix l = make_gaussian_kernel({{0.0, 0.0}, {sigma * std::sqrt(2.0), 0.0}}, sigma);
  EXPECT_NEAR(l(0, 1), std::exp(-1.0), 1e-15);
}

TEST(GaussianKernel, TwentyByTwentyGrid) {
  const auto pts = grid_points(20);
  ASSERT_EQ(pts.size(), 400u);
  EXPECT_EQ(pts[0], (PlanePoint{0.0, 0.0}));
  EXPECT_EQ(pts[19], (PlanePoint{1.0, 0.0}));
  EXPECT_DOUBLE_EQ(pts[20][1], 1.0 / 19.0);
  EXPECT_EQ(pts[399], (PlanePoint{1.0, 1.0}));
  const Matrix l = make_gaussian_kernel(pts, 0.04);
  EXPECT_EQ(l.rows(), 400);
  const double d = 1.0 / 19.0;
  EXPECT_NEAR(l(0, 1), std::exp(-(d * d) / (2 * 0.04 * 0.04)), 1e-15);
  EXPECT_THROW(make_gaussian_kernel(pts, 0.0), ConfigError);
}

// ------------------------------------------------------------ properties

TEST(Properties, AntitoneGradientsForDrSubmodularObjectives) {
  EXPECT_LE(worst_antitone_violation(*make_qp_instance(6, 3, 1).g, 0.0, 1.0, 1), 1e-8);
  EXPECT_LE(worst_antitone_violation(SoftmaxExtension(seeded_kernel(5, 2, 0.3)), 0.0, 1.0, 2), 1e-8);
  EXPECT_LE(worst_antitone_violation(DOptimalObjective(make_gaussian_design(5, 3)), 1.0, 2.0, 3), 1e-8);
  StructuredQpSpec spec;
  NonObliviousWrapper w(make_structured_qp(spec).g, 0.25);
  EXPECT_LE(worst_antitone_violation(w, 0.0, 1.0, 4), 1e-8);
}

TEST(Properties, ConcavityProbeForConcaveObjectives) {
  EXPECT_LE(worst_concavity_violation(*make_qp_instance(6, 3, 1).c, 0.0, 1.0, 1), 1e-9);
  EXPECT_LE(worst_concavity_violation(SimilarityConcave(seeded_kernel(6, 5, 0.3)), 0.0, 1.0, 2), 1e-9);
  EXPECT_LE(worst_concavity_violation(LogBarrierConcave(4, 0.1), 0.5, 2.0, 3), 1e-9);
}
