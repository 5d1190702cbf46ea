// fwsubmix: benchmark harness for the Frank-Wolfe solver library.
//
//   fwsubmix run <config> [--n N] [--m M] [--seed LIST] [--algo LIST] [--out DIR]
//   fwsubmix verify <instance> [--points K] [--seed S]
//   fwsubmix oracle <instance> --step S
//   fwsubmix generate qp|doptimal|interpolation --out FILE [...]
//
// Exit codes: 0 success, 1 verify found a failing check, 2 config/parse
// error, 3 solver error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "fwsubmix/bench/config.hpp"
#include "fwsubmix/bench/experiments.hpp"
#include "fwsubmix/bench/output.hpp"
#include "fwsubmix/errors.hpp"
#include "fwsubmix/generators.hpp"
#include "fwsubmix/instance_io.hpp"
#include "fwsubmix/objectives.hpp"
#include "fwsubmix/verify.hpp"

namespace {

using namespace fwsubmix;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

int cmd_run(const std::string& config_path, const bench::ConfigOverrides& overrides) {
  bench::ExperimentConfig cfg = bench::load_config(config_path);
  bench::apply_overrides(cfg, overrides);
  for (const auto& outcome : bench::run_experiment(cfg)) {
    for (const auto& path : bench::write_outputs(cfg, outcome)) {
      std::cout << "wrote " << path.string() << '\n';
    }
    for (const auto& s : outcome.series) {
      std::cout << outcome.label << ' ' << solver_name(s.solver) << " final ";
      std::cout << (s.available ? bench::format_value(s.mean_final) : std::string("n/a")) << '\n';
    }
    if (outcome.solution) {
      std::cout << outcome.label << " similarity_score "
                << bench::format_value(outcome.similarity_score) << '\n';
    }
  }
  return 0;
}

int cmd_verify(const std::string& instance_path, int points, std::uint64_t seed) {
  const ProblemInstance p = load_instance(instance_path);
  const ObjectivePair& obj = p.objective();
  const FeasibleRegion& region = p.region();
  bool ok = true;

  auto report = [&ok](const std::string& what, double measured, double tol, bool passed) {
    ok = ok && passed;
    std::cout << (passed ? "PASS " : "FAIL ") << what << ' ' << bench::format_value(measured)
              << " (tol " << bench::format_value(tol) << ")\n";
  };

  CounterRng rng(seed, 7);
  double worst_g = 0.0;
  double worst_c = 0.0;
  for (int i = 0; i < points; ++i) {
    const Vector x = sample_feasible(region, rng);
    worst_g = std::max(worst_g, relative_error(obj.g().gradient(x), finite_diff_grad(obj.g(), x)));
    worst_c = std::max(worst_c, relative_error(obj.c().gradient(x), finite_diff_grad(obj.c(), x)));
  }
  const double grad_tol = kTolerances.gradient_check;
  report("gradient G vs finite differences, max rel err", worst_g, grad_tol, worst_g <= grad_tol);
  report("gradient C vs finite differences, max rel err", worst_c, grad_tol, worst_c <= grad_tol);

  const FeasibleRegion box = FeasibleRegion::box(region.lower_bounds(), region.upper_bounds());
  const PropertyReport dr = check_dr_submodular(obj.g(), box, 200, 1e-8, seed);
  report("G antitone gradient, max violation", dr.max_violation, 1e-8, dr.passed);
  const PropertyReport cc = check_concave(obj.c(), region, 200, 1e-9, seed);
  report("C midpoint concavity, max violation", cc.max_violation, 1e-9, cc.passed);

  std::cout << "smoothness estimate of F " << bench::format_value(estimate_smoothness(obj, region, 1000, seed))
            << '\n';
  std::cout << "diameter bound " << bench::format_value(diameter_bound(region)) << '\n';
  return ok ? 0 : kExitVerifyFailed;
}

int cmd_oracle(const std::string& instance_path, double step) {
  const ProblemInstance p = load_instance(instance_path);
  const GridOracleResult r = grid_maximize(p, step);
  std::cout << "value " << bench::format_value(r.value) << '\n';
  std::cout << "g_part " << bench::format_value(r.g_value) << '\n';
  std::cout << "c_part " << bench::format_value(r.c_value) << '\n';
  std::cout << "argmax";
  for (std::size_t i = 0; i < r.argmax.size(); ++i) std::cout << ' ' << bench::format_value(r.argmax[i]);
  std::cout << "\npoints_scanned " << r.points_scanned << '\n';
  return 0;
}

struct GenerateOptions {
  std::string kind;
  std::size_t n = 8;
  std::size_t m = 4;
  std::uint64_t seed = 0;
  double lambda = 0.5;
  std::size_t side = 20;
  double sigma = 0.04;
  double budget = 25.0;
  std::string out;
};

int cmd_generate(const GenerateOptions& o) {
  if (o.kind == "qp") {
    save_instance(o.out, make_qp_instance(o.n, o.m, o.seed).problem(o.lambda));
  } else if (o.kind == "doptimal") {
    const auto k = static_cast<Eigen::Index>(o.n);
    ProblemInstance p(ObjectivePair(std::make_shared<DOptimalObjective>(make_gaussian_design(o.n, o.seed)),
                                    std::make_shared<LogBarrierConcave>(o.n, 0.1), o.lambda,
                                    ObjectiveFlags{true, false, true, false}),
                      FeasibleRegion::box(Vector::Ones(k), Vector::Constant(k, 2.0)));
    save_instance(o.out, p);
  } else if (o.kind == "interpolation") {
    const Matrix kernel = make_gaussian_kernel(grid_points(o.side), o.sigma);
    ProblemInstance p(ObjectivePair(std::make_shared<SoftmaxExtension>(kernel),
                                    std::make_shared<SimilarityConcave>(kernel), o.lambda),
                      FeasibleRegion::cardinality(o.side * o.side, o.budget));
    save_instance(o.out, p);
  } else {
    throw ConfigError("unknown instance kind '" + o.kind + "'");
  }
  std::cout << "wrote " << o.out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frank-Wolfe solvers for DR-submodular + concave maximization"};
  app.require_subcommand(1);

  std::string config_path;
  bench::ConfigOverrides overrides;
  auto* run = app.add_subcommand("run", "Run an experiment described by a config file");
  run->add_option("config", config_path, "Config file (key=value)")->required();
  run->add_option_function<std::size_t>("--n", [&](std::size_t v) { overrides.n = v; }, "Dimension");
  run->add_option_function<std::size_t>("--m", [&](std::size_t v) { overrides.m = v; }, "Constraint count");
  run->add_option_function<std::string>("--seed", [&](const std::string& v) { overrides.seeds = v; },
                                        "Seed list, e.g. 0-49 or 1,2,3");
  run->add_option_function<std::string>("--algo", [&](const std::string& v) { overrides.algorithms = v; },
                                        "Comma-separated solver names");
  run->add_option_function<std::string>("--out", [&](const std::string& v) { overrides.output_dir = v; },
                                        "Output directory");

  std::string instance_path;
  int points = 100;
  std::uint64_t verify_seed = 0;
  auto* verify = app.add_subcommand("verify", "Check gradients, DR-submodularity and concavity");
  verify->add_option("instance", instance_path, "Instance file")->required();
  verify->add_option("--points", points, "Random points for the gradient check")->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_seed, "Sampling seed");

  double grid_step = 0.0;
  auto* oracle = app.add_subcommand("oracle", "Brute-force grid maximizer (n <= 6)");
  oracle->add_option("instance", instance_path, "Instance file")->required();
  oracle->add_option("--step", grid_step, "Grid step")->required()->check(CLI::PositiveNumber);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a seeded instance file");
  generate->add_option("kind", gen.kind, "qp | doptimal | interpolation")->required();
  generate->add_option("--out", gen.out, "Output file")->required();
  generate->add_option("--n", gen.n, "Dimension");
  generate->add_option("--m", gen.m, "Constraint count (qp)");
  generate->add_option("--seed", gen.seed, "Seed");
  generate->add_option("--lambda", gen.lambda, "Mixing weight");
  generate->add_option("--side", gen.side, "Grid side (interpolation)");
  generate->add_option("--sigma", gen.sigma, "Kernel width (interpolation)");
  generate->add_option("--budget", gen.budget, "Cardinality budget (interpolation)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) return cmd_run(config_path, overrides);
    if (*verify) return cmd_verify(instance_path, points, verify_seed);
    if (*oracle) return cmd_oracle(instance_path, grid_step);
    if (*generate) return cmd_generate(gen);
  } catch (const ParseError& e) {
    std::cerr << "fwsubmix: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "fwsubmix: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "fwsubmix: " << e.what() << '\n';
    return kExitSolver;
  }
  return 0;
}
