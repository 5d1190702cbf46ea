#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fwsubmix/solvers.hpp"

namespace fwsubmix::bench {

enum class ExperimentKind { qp, doptimal, interpolation, custom };

std::string_view experiment_name(ExperimentKind kind);

enum class DesignKind { gaussian, identity };

/// Flat key=value experiment description. Lines starting with '#' are
/// comments. Recognized keys:
///
///   experiment           qp | doptimal | interpolation | custom
///   n, m                 problem sizes (m only for qp)
///   seeds                comma list; `a-b` expands to a, a+1, ..., b
///   algorithms           comma list of solver names, or `all`
///   iterations           update steps per run (default 50)
///   step                 step size (default 1/iterations)
///   lambda               mixing weight (default 0.5)
///   sigma, budget        interpolation kernel width and cardinality
///   grid_side            interpolation grid side (default 20)
///   design               gaussian | identity (doptimal only)
///   epsilon              solver epsilon for custom runs (default 0.1)
///   check_preconditions  true | false (custom runs, default true)
///   instances            comma list of instance files (custom only)
///   output_dir           where CSV/SVG files go (default .)
///   workers              worker threads, 0 = hardware concurrency
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::qp;
  std::size_t n = 8;
  std::size_t m = 4;
  std::vector<std::uint64_t> seeds{0};
  std::vector<SolverKind> algorithms{std::begin(kAllSolvers), std::end(kAllSolvers)};
  std::optional<int> iterations;
  std::optional<double> step;
  double lambda = 0.5;
  double sigma = 0.04;
  double budget = 25.0;
  std::size_t grid_side = 20;
  DesignKind design = DesignKind::gaussian;
  double epsilon = 0.1;
  bool check_preconditions = true;
  std::vector<std::filesystem::path> instances;
  std::filesystem::path output_dir = ".";
  unsigned workers = 0;

  int iteration_count() const { return iterations.value_or(50); }
  double step_size() const { return step.value_or(1.0 / iteration_count()); }
};

/// Command-line overrides applied on top of a parsed config.
struct ConfigOverrides {
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::optional<std::string> seeds;
  std::optional<std::string> algorithms;
  std::optional<std::filesystem::path> output_dir;
};

/// Throws ParseError with the offending line. Relative instance paths are
/// resolved against `base_dir`.
ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

void apply_overrides(ExperimentConfig& cfg, const ConfigOverrides& overrides);

/// Checks cross-field requirements (ranges, keys required by the chosen
/// experiment). Throws ConfigError.
void validate(const ExperimentConfig& cfg);

std::vector<std::uint64_t> parse_seed_list(std::string_view text);
std::vector<SolverKind> parse_solver_list(std::string_view text);

}  // namespace fwsubmix::bench
