#include "fwsubmix/bench/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <memory>
#include <thread>

#include "fwsubmix/generators.hpp"
#include "fwsubmix/instance_io.hpp"
#include "fwsubmix/objectives.hpp"

namespace fwsubmix::bench {

namespace {

using ProblemFactory = std::function<ProblemInstance(std::uint64_t seed)>;

std::string number_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Solver run that turns unsupported regions into "n/a" and every other
// library error into SolverFailure.
std::optional<SolverReport> run_guarded(SolverKind kind, const ProblemInstance& p,
                                        const SolverConfig& sc, std::string_view where) {
  try {
    return run_solver(kind, p, sc);
  } catch (const UnsupportedRegionError&) {
    return std::nullopt;
  } catch (const Error& e) {
    throw SolverFailure(std::string(solver_name(kind)) + " failed on " + std::string(where) +
                        ": " + e.what());
  }
}

SolverSeries aggregate(SolverKind kind, std::vector<std::optional<SolverReport>> runs,
                       std::size_t rows, bool flatten_best_of) {
  SolverSeries s;
  s.solver = kind;
  for (const auto& r : runs) {
    if (!r) {
      s.available = false;
      s.unavailable_reason = "region does not support projection";
      return s;
    }
  }
  const double count = static_cast<double>(runs.size());
  s.rows.assign(rows, std::nullopt);
  double final_sum = 0.0;
  for (const auto& r : runs) final_sum += r->output_value;
  s.mean_final = final_sum / count;
  if (flatten_best_of && is_best_of_trajectory(kind)) {
    std::fill(s.rows.begin(), s.rows.end(), s.mean_final);
  } else {
    for (std::size_t row = 0; row < rows; ++row) {
      double sum = 0.0;
      bool complete = true;
      for (const auto& r : runs) {
        if (row + 1 >= r->values.size()) {
          complete = false;
          break;
        }
        sum += r->values[row + 1];
      }
      if (complete) s.rows[row] = sum / count;
    }
  }
  s.reports.reserve(runs.size());
  for (auto& r : runs) s.reports.push_back(std::move(*r));
  return s;
}

ExperimentOutcome run_seeded(const ExperimentConfig& cfg, const ProblemFactory& make,
                             std::string label) {
  const std::size_t seeds = cfg.seeds.size();
  const std::size_t solvers = cfg.algorithms.size();
  const int iterations = cfg.iteration_count();
  const double step = cfg.step_size();
  std::vector<std::vector<std::optional<SolverReport>>> grid(
      solvers, std::vector<std::optional<SolverReport>>(seeds));

  parallel_for(seeds, cfg.workers, [&](std::size_t i) {
    const std::uint64_t seed = cfg.seeds[i];
    const ProblemInstance problem = make(seed);
    for (std::size_t k = 0; k < solvers; ++k) {
      const SolverKind kind = cfg.algorithms[k];
      const SolverConfig sc = experiment_solver_config(kind, problem.region(), iterations, step);
      grid[k][i] = run_guarded(kind, problem, sc, label + " seed " + std::to_string(seed));
    }
  });

  ExperimentOutcome out;
  out.label = std::move(label);
  out.row_count = static_cast<std::size_t>(iterations);
  for (std::size_t k = 0; k < solvers; ++k) {
    out.series.push_back(aggregate(cfg.algorithms[k], std::move(grid[k]), out.row_count, true));
  }
  return out;
}

}  // namespace

std::vector<Series> ExperimentOutcome::table() const {
  std::vector<Series> cols;
  for (const auto& s : series) {
    cols.push_back({std::string(solver_name(s.solver)), s.available ? s.rows
                                                                    : std::vector<std::optional<double>>{}});
  }
  return cols;
}

const SolverSeries* ExperimentOutcome::find(SolverKind kind) const {
  for (const auto& s : series) {
    if (s.solver == kind) return &s;
  }
  return nullptr;
}

SolverConfig experiment_solver_config(SolverKind kind, const FeasibleRegion& region,
                                      int iterations, double step) {
  SolverConfig sc;
  sc.check_preconditions = false;
  sc.iterations = iterations;
  sc.step = step;
  sc.epsilon = std::min(0.5, 1.0 / iterations);
  if (kind != SolverKind::greedy && kind != SolverKind::measured_greedy) {
    sc.start = interior_point(region);
  }
  if (kind == SolverKind::non_oblivious) {
    const double eps = nonoblivious_epsilon_for_iterations(iterations);
    sc.epsilon = eps;
    sc.step = eps;
    sc.nonoblivious_epsilon = eps;
  }
  return sc;
}

void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& job) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

ExperimentOutcome run_qp_experiment(const ExperimentConfig& cfg) {
  const double lambda = cfg.lambda;
  return run_seeded(
      cfg,
      [&cfg, lambda](std::uint64_t seed) {
        return make_qp_instance(cfg.n, cfg.m, seed).problem(lambda);
      },
      "qp_n" + std::to_string(cfg.n) + "_m" + std::to_string(cfg.m));
}

ExperimentOutcome run_doptimal_experiment(const ExperimentConfig& cfg,
                                          const std::optional<Matrix>& design_override) {
  std::optional<Matrix> design = design_override;
  if (!design && cfg.design == DesignKind::identity) {
    const auto n = static_cast<Eigen::Index>(cfg.n);
    design = Matrix::Identity(n, n);
  }
  const double lambda = cfg.lambda;
  const std::size_t n = cfg.n;
  return run_seeded(
      cfg,
      [design, lambda, n](std::uint64_t seed) {
        Matrix y = design ? *design : make_gaussian_design(n, seed);
        auto g = std::make_shared<DOptimalObjective>(std::move(y));
        auto c = std::make_shared<LogBarrierConcave>(n, 0.1);
        const auto k = static_cast<Eigen::Index>(n);
        return ProblemInstance(ObjectivePair(g, c, lambda, ObjectiveFlags{true, false, true, false}),
                               FeasibleRegion::box(Vector::Ones(k), Vector::Constant(k, 2.0)));
      },
      "doptimal_n" + std::to_string(cfg.n));
}

double similarity_score(const Matrix& kernel, const Vector& x) { return x.dot(kernel * x); }

ExperimentOutcome run_interpolation_experiment(const ExperimentConfig& cfg) {
  const std::size_t side = cfg.grid_side;
  const std::size_t n = side * side;
  Matrix kernel = make_gaussian_kernel(grid_points(side), cfg.sigma);
  auto g = std::make_shared<SoftmaxExtension>(kernel);
  auto c = std::make_shared<SimilarityConcave>(kernel);
  const ProblemInstance problem(ObjectivePair(g, c, cfg.lambda), FeasibleRegion::cardinality(n, cfg.budget));

  SolverConfig sc;
  sc.check_preconditions = false;
  sc.iterations = cfg.iteration_count();
  sc.step = cfg.step_size();
  sc.start = Point::constant(n, cfg.budget / static_cast<double>(n));

  ExperimentOutcome out;
  out.label = "interpolation_lambda" + number_label(cfg.lambda);
  out.row_count = static_cast<std::size_t>(cfg.iteration_count());
  out.grid_side = side;
  std::vector<std::optional<SolverReport>> runs;
  runs.push_back(run_guarded(SolverKind::gradient_combining, problem, sc, out.label));
  out.series.push_back(aggregate(SolverKind::gradient_combining, std::move(runs), out.row_count, false));
  const Vector& x = out.series.front().reports.front().output.coords();
  out.solution = x;
  out.similarity_score = similarity_score(kernel, x);
  return out;
}

std::vector<ExperimentOutcome> run_custom(const ExperimentConfig& cfg) {
  std::vector<ExperimentOutcome> outcomes;
  for (const auto& path : cfg.instances) {
    const ProblemInstance problem = load_instance(path);
    ExperimentOutcome out;
    out.label = "custom_" + path.stem().string();
    std::vector<std::optional<SolverReport>> runs(cfg.algorithms.size());
    parallel_for(cfg.algorithms.size(), cfg.workers, [&](std::size_t k) {
      SolverConfig sc;
      sc.epsilon = cfg.epsilon;
      sc.iterations = cfg.iterations;
      sc.step = cfg.step;
      sc.check_preconditions = cfg.check_preconditions;
      runs[k] = run_guarded(cfg.algorithms[k], problem, sc, path.string());
    });
    for (const auto& r : runs) {
      if (r) out.row_count = std::max(out.row_count, r->values.size() - 1);
    }
    for (std::size_t k = 0; k < runs.size(); ++k) {
      std::vector<std::optional<SolverReport>> one;
      one.push_back(std::move(runs[k]));
      out.series.push_back(aggregate(cfg.algorithms[k], std::move(one), out.row_count, false));
    }
    outcomes.push_back(std::move(out));
  }
  return outcomes;
}

std::vector<ExperimentOutcome> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  switch (cfg.experiment) {
    case ExperimentKind::qp: return {run_qp_experiment(cfg)};
    case ExperimentKind::doptimal: return {run_doptimal_experiment(cfg)};
    case ExperimentKind::interpolation: return {run_interpolation_experiment(cfg)};
    case ExperimentKind::custom: return run_custom(cfg);
  }
  return {};
}

std::vector<std::filesystem::path> write_outputs(const ExperimentConfig& cfg,
                                                 const ExperimentOutcome& outcome) {
  std::filesystem::create_directories(cfg.output_dir);
  std::vector<std::filesystem::path> written;
  auto open = [&](const std::string& name) {
    const auto path = cfg.output_dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    written.push_back(path);
    return out;
  };
  {
    auto csv = open(outcome.label + ".csv");
    write_trajectory_csv(csv, outcome.table(), outcome.row_count);
  }
  if (outcome.solution) {
    auto csv = open(outcome.label + "_solution.csv");
    write_grid_vector_csv(csv, *outcome.solution, outcome.grid_side);
    auto svg = open(outcome.label + ".svg");
    svg << render_heatmap_svg(*outcome.solution, outcome.grid_side);
  }
  return written;
}

}  // namespace fwsubmix::bench
