#include "fwsubmix/bench/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <string>

#include "fwsubmix/errors.hpp"

namespace fwsubmix::bench {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view text, std::string_view key) {
  T v{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError("invalid value '" + std::string(text) + "' for " + std::string(key));
  }
  return v;
}

bool parse_bool(std::string_view text, std::string_view key) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError("invalid boolean '" + std::string(text) + "' for " + std::string(key));
}

void set_key(ExperimentConfig& cfg, std::string_view key, std::string_view value,
             const std::filesystem::path& base_dir) {
  if (key == "experiment") {
    if (value == "qp") {
      cfg.experiment = ExperimentKind::qp;
    } else if (value == "doptimal") {
      cfg.experiment = ExperimentKind::doptimal;
    } else if (value == "interpolation") {
      cfg.experiment = ExperimentKind::interpolation;
    } else if (value == "custom") {
      cfg.experiment = ExperimentKind::custom;
    } else {
      throw ConfigError("unknown experiment '" + std::string(value) + "'");
    }
  } else if (key == "n") {
    cfg.n = parse_number<std::size_t>(value, key);
  } else if (key == "m") {
    cfg.m = parse_number<std::size_t>(value, key);
  } else if (key == "seeds" || key == "seed") {
    cfg.seeds = parse_seed_list(value);
  } else if (key == "algorithms") {
    cfg.algorithms = parse_solver_list(value);
  } else if (key == "iterations") {
    cfg.iterations = parse_number<int>(value, key);
  } else if (key == "step") {
    cfg.step = parse_number<double>(value, key);
  } else if (key == "lambda") {
    cfg.lambda = parse_number<double>(value, key);
  } else if (key == "sigma") {
    cfg.sigma = parse_number<double>(value, key);
  } else if (key == "budget") {
    cfg.budget = parse_number<double>(value, key);
  } else if (key == "grid_side") {
    cfg.grid_side = parse_number<std::size_t>(value, key);
  } else if (key == "design") {
    if (value == "gaussian") {
      cfg.design = DesignKind::gaussian;
    } else if (value == "identity") {
      cfg.design = DesignKind::identity;
    } else {
      throw ConfigError("unknown design '" + std::string(value) + "'");
    }
  } else if (key == "epsilon") {
    cfg.epsilon = parse_number<double>(value, key);
  } else if (key == "check_preconditions") {
    cfg.check_preconditions = parse_bool(value, key);
  } else if (key == "instances") {
    cfg.instances.clear();
    for (auto part : split(value, ',')) {
      if (part.empty()) throw ConfigError("empty entry in instances");
      std::filesystem::path p(part);
      cfg.instances.push_back(p.is_relative() && !base_dir.empty() ? base_dir / p : p);
    }
  } else if (key == "output_dir") {
    cfg.output_dir = std::filesystem::path(value);
  } else if (key == "workers") {
    cfg.workers = parse_number<unsigned>(value, key);
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

}  // namespace

std::string_view experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::qp: return "qp";
    case ExperimentKind::doptimal: return "doptimal";
    case ExperimentKind::interpolation: return "interpolation";
    case ExperimentKind::custom: return "custom";
  }
  return "unknown";
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  for (auto part : split(text, ',')) {
    const auto dash = part.find('-');
    if (dash == std::string_view::npos) {
      seeds.push_back(parse_number<std::uint64_t>(part, "seeds"));
      continue;
    }
    const auto lo = parse_number<std::uint64_t>(trim(part.substr(0, dash)), "seeds");
    const auto hi = parse_number<std::uint64_t>(trim(part.substr(dash + 1)), "seeds");
    if (hi < lo) throw ConfigError("empty seed range '" + std::string(part) + "'");
    for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  return seeds;
}

std::vector<SolverKind> parse_solver_list(std::string_view text) {
  if (trim(text) == "all") return {std::begin(kAllSolvers), std::end(kAllSolvers)};
  std::vector<SolverKind> out;
  for (auto part : split(text, ',')) {
    const auto kind = parse_solver(part);
    if (!kind) throw ConfigError("unknown solver '" + std::string(part) + "'");
    if (std::find(out.begin(), out.end(), *kind) != out.end()) {
      throw ConfigError("solver '" + std::string(part) + "' listed twice");
    }
    out.push_back(*kind);
  }
  return out;
}

ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir) {
  ExperimentConfig cfg;
  std::set<std::string, std::less<>> seen;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ParseError(line, "expected key=value");
    const auto key = trim(text.substr(0, eq));
    const auto value = trim(text.substr(eq + 1));
    if (key.empty()) throw ParseError(line, "missing key");
    if (!seen.insert(std::string(key)).second) {
      throw ParseError(line, "duplicate key '" + std::string(key) + "'");
    }
    try {
      set_key(cfg, key, value, base_dir);
    } catch (const ConfigError& e) {
      throw ParseError(line, e.what());
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open config " + path.string());
  return parse_config(in, path.parent_path());
}

void apply_overrides(ExperimentConfig& cfg, const ConfigOverrides& o) {
  if (o.n) cfg.n = *o.n;
  if (o.m) cfg.m = *o.m;
  if (o.seeds) cfg.seeds = parse_seed_list(*o.seeds);
  if (o.algorithms) cfg.algorithms = parse_solver_list(*o.algorithms);
  if (o.output_dir) cfg.output_dir = *o.output_dir;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.seeds.empty()) throw ConfigError("at least one seed is required");
  if (cfg.algorithms.empty()) throw ConfigError("at least one algorithm is required");
  if (cfg.iteration_count() < 1) throw ConfigError("iterations must be >= 1");
  if (cfg.step && !(*cfg.step >= 0.0 && *cfg.step <= 1.0)) {
    throw ConfigError("step must lie in [0, 1]");
  }
  if (!(cfg.lambda >= 0.0 && cfg.lambda <= 1.0)) throw ConfigError("lambda must lie in [0, 1]");
  switch (cfg.experiment) {
    case ExperimentKind::qp:
      if (cfg.n < 1 || cfg.m < 1) throw ConfigError("qp needs n >= 1 and m >= 1");
      break;
    case ExperimentKind::doptimal:
      if (cfg.n < 1) throw ConfigError("doptimal needs n >= 1");
      break;
    case ExperimentKind::interpolation:
      if (!cfg.iterations || !cfg.step) {
        throw ConfigError("interpolation needs explicit iterations and step");
      }
      if (cfg.grid_side < 2) throw ConfigError("grid_side must be >= 2");
      if (!(cfg.sigma > 0.0)) throw ConfigError("sigma must be > 0");
      if (!(cfg.budget > 0.0 &&
            cfg.budget <= static_cast<double>(cfg.grid_side * cfg.grid_side))) {
        throw ConfigError("budget must lie in (0, grid_side^2]");
      }
      break;
    case ExperimentKind::custom:
      if (cfg.instances.empty()) throw ConfigError("custom needs at least one instance file");
      break;
  }
}

}  // namespace fwsubmix::bench
