#include <filesystem>
#include <memory>
#include <sstream>

#include <gtest/gtest.h>

#include "fwsubmix/errors.hpp"
#include "fwsubmix/generators.hpp"
#include "fwsubmix/instance_io.hpp"
#include "fwsubmix/objectives.hpp"
#include "fwsubmix/rng.hpp"
#include "fwsubmix/solvers.hpp"

using namespace fwsubmix;

namespace {

ProblemInstance round_trip(const ProblemInstance& p) {
  std::stringstream s;
  write_instance(s, p);
  return read_instance(s);
}

std::string text_of(const ProblemInstance& p) {
  std::ostringstream s;
  write_instance(s, p);
  return s.str();
}

void expect_same_values(const ProblemInstance& a, const ProblemInstance& b) {
  ASSERT_EQ(a.dimension(), b.dimension());
  EXPECT_EQ(a.objective().lambda(), b.objective().lambda());
  EXPECT_EQ(a.objective().flags().g_monotone, b.objective().flags().g_monotone);
  EXPECT_EQ(a.objective().flags().c_nonneg, b.objective().flags().c_nonneg);
  EXPECT_EQ(a.region().kind_name(), std::string(b.region().kind_name()));
  EXPECT_EQ(a.region().lower_bounds(), b.region().lower_bounds());
  EXPECT_EQ(a.region().upper_bounds(), b.region().upper_bounds());
  CounterRng rng(3, 0);
  const auto n = static_cast<Eigen::Index>(a.dimension());
  for (int i = 0; i < 20; ++i) {
    Vector x(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      x[j] = rng.uniform(a.region().lower_bounds()[j], a.region().upper_bounds()[j]);
    }
    EXPECT_EQ(evaluate_F(a.objective(), x), evaluate_F(b.objective(), x));
    OracleCounters ca, cb;
    EXPECT_EQ(gradient_F(a.objective(), x, ca), gradient_F(b.objective(), x, cb));
  }
}

const char* kValid =
    "fwsubmix-instance 1\n"
    "# comment\n"
    "lambda 0.5\n"
    "flags g_monotone=1 g_nonneg=1 c_monotone=0 c_nonneg=1\n"
    "g quadratic\n"
    "matrix H 2 2\n"
    "-1 -0.5\n"
    "-0.5 -1\n"
    "vector h 2\n"
    "1 1\n"
    "scalar c 0\n"
    "c logbarrier\n"
    "scalar n 2\n"
    "scalar scale 0.1\n"
    "region box\n"
    "vector lower 2\n"
    "1 1\n"
    "vector upper 2\n"
    "2 2\n"
    "end\n";

}  // namespace

TEST(InstanceIo, ParsesDocumentedExample) {
  std::istringstream in(kValid);
  const ProblemInstance p = read_instance(in);
  EXPECT_EQ(p.dimension(), 2u);
  EXPECT_TRUE(p.region().is_box());
  EXPECT_TRUE(p.objective().flags().g_monotone);
  EXPECT_FALSE(p.objective().flags().c_monotone);
  EXPECT_FALSE(p.objective().smoothness().has_value());
  EXPECT_NEAR(evaluate_F(p.objective(), Vector::Ones(2)), 0.5 * (-1.5 + 2.0), 1e-15);
}

TEST(InstanceIo, QpRoundTripIsExact) {
  const ProblemInstance p = make_qp_instance(8, 4, 12).problem(0.3);
  const ProblemInstance q = round_trip(p);
  expect_same_values(p, q);
  EXPECT_EQ(text_of(p), text_of(q));
}

TEST(InstanceIo, InterpolationRoundTrip) {
  const Matrix k = make_gaussian_kernel(grid_points(3), 0.3);
  const ProblemInstance p(ObjectivePair(std::make_shared<SoftmaxExtension>(k),
                                        std::make_shared<SimilarityConcave>(k), 0.25, {}, 4.5),
                          FeasibleRegion::cardinality(9, 2.5));
  const ProblemInstance q = round_trip(p);
  expect_same_values(p, q);
  ASSERT_TRUE(q.objective().smoothness().has_value());
  EXPECT_EQ(*q.objective().smoothness(), 4.5);
}

TEST(InstanceIo, DOptimalRoundTrip) {
  const auto n = static_cast<Eigen::Index>(4);
  const ProblemInstance p(
      ObjectivePair(std::make_shared<DOptimalObjective>(make_gaussian_design(4, 2)),
                    std::make_shared<LogBarrierConcave>(4, 0.1), 0.5, ObjectiveFlags{true, false, true, false}),
      FeasibleRegion::box(Vector::Ones(n), Vector::Constant(n, 2.0)));
  expect_same_values(p, round_trip(p));
}

TEST(InstanceIo, ReloadedInstanceGivesIdenticalTrajectory) {
  const ProblemInstance p = make_qp_instance(6, 3, 5).problem();
  const auto dir = std::filesystem::temp_directory_path() / "fwsubmix_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "qp.txt";
  save_instance(path, p);
  const ProblemInstance q = load_instance(path);
  SolverConfig cfg;
  cfg.check_preconditions = false;
  cfg.epsilon = 0.05;
  const auto a = greedy_fw(p, cfg);
  const auto b = greedy_fw(q, cfg);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.output, b.output);
  std::filesystem::remove_all(dir);
}

TEST(InstanceIo, BadHeaderReportsLineOne) {
  std::istringstream in("fwsubmix-instance 2\nlambda 0.5\n");
  try {
    read_instance(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(InstanceIo, BadNumberReportsItsLine) {
  std::string text = kValid;
  text.replace(text.find("-0.5 -1"), 7, "-0.5 x1");
  std::istringstream in(text);
  try {
    read_instance(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 8u);
  }
}

TEST(InstanceIo, MissingEndAndUnknownKindAreErrors) {
  std::string text = kValid;
  text.erase(text.find("end\n"));
  std::istringstream a(text);
  EXPECT_THROW(read_instance(a), ParseError);

  std::string other = kValid;
  other.replace(other.find("region box"), 10, "region ball");
  std::istringstream b(other);
  try {
    read_instance(b);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 15u);
  }
}

TEST(InstanceIo, InvalidContentsBecomeParseErrors) {
  std::string text = kValid;
  text.replace(text.find("2 2\nend"), 3, "0 2");
  std::istringstream in(text);
  EXPECT_THROW(read_instance(in), ParseError);
}

TEST(InstanceIo, MissingFile) {
  try {
    load_instance("/nonexistent/fwsubmix/instance.txt");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 0u);
  }
}
