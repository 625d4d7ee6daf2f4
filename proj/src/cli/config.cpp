// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cstdio>
#include <sstream>

#include "ratrack/cli.hpp"

namespace ratrack::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* first = value.data();
  const char* last = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError("bad value for '" + key + "': '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  throw ConfigError("bad boolean for '" + key + "': '" + value + "'");
}

std::string check_choice(const std::string& key, const std::string& value,
                         std::initializer_list<const char*> choices) {
  for (const char* c : choices) {
    if (value == c) return value;
  }
  throw ConfigError("bad value for '" + key + "': '" + value + "'");
}

}  // namespace

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
  else if (key == "n") cfg.n = parse_number<int>(key, value);
  else if (key == "robots") cfg.robots = parse_number<int>(key, value);
  else if (key == "targets") cfg.targets = parse_number<int>(key, value);
  else if (key == "actions") cfg.actions = parse_number<int>(key, value);
  else if (key == "steps") cfg.steps = parse_number<int>(key, value);
  else if (key == "trials") cfg.trials = parse_number<int>(key, value);
  else if (key == "m_min") cfg.m_min = parse_number<int>(key, value);
  else if (key == "m_max") cfg.m_max = parse_number<int>(key, value);
  else if (key == "sensor") cfg.sensor = check_choice(key, value, {"auto", "range-bearing", "range", "bearing"});
  else if (key == "metric") cfg.metric = check_choice(key, value, {"trace", "logdet", "maxeig"});
  else if (key == "solver") cfg.solver = check_choice(key, value, {"greedy", "exhaustive", "random"});
  else if (key == "budget") cfg.budget = parse_number<std::uint64_t>(key, value);
  else if (key == "format") cfg.format = check_choice(key, value, {"csv", "json"});
  else if (key == "out") cfg.out = value;
  else if (key == "timings") cfg.timings = parse_bool(key, value);
  else if (key == "exhaustive") cfg.exhaustive = parse_bool(key, value);
  else if (key == "dt") cfg.dt = parse_number<double>(key, value);
  else if (key == "world_half_extent") cfg.world_half_extent = parse_number<double>(key, value);
  else if (key == "sigma_init") cfg.sigma_init = parse_number<double>(key, value);
  else if (key == "target_sigma") cfg.target_sigma = parse_number<double>(key, value);
  else if (key == "sigma_r0") cfg.sigma_r0 = parse_number<double>(key, value);
  else if (key == "kappa_r") cfg.kappa_r = parse_number<double>(key, value);
  else if (key == "sigma_b0") cfg.sigma_b0 = parse_number<double>(key, value);
  else if (key == "kappa_b") cfg.kappa_b = parse_number<double>(key, value);
  else throw ConfigError("unknown config key '" + key + "'");
}

RunConfig parse_run_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    apply_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string emit_run_config(const RunConfig& c) {
  std::ostringstream os;
  auto b = [](bool v) { return v ? "true" : "false"; };
  os << "seed = " << c.seed << '\n'
     << "n = " << c.n << '\n'
     << "robots = " << c.robots << '\n'
     << "targets = " << c.targets << '\n'
     << "actions = " << c.actions << '\n'
     << "steps = " << c.steps << '\n'
     << "trials = " << c.trials << '\n'
     << "m_min = " << c.m_min << '\n'
     << "m_max = " << c.m_max << '\n'
     << "sensor = " << c.sensor << '\n'
     << "metric = " << c.metric << '\n'
     << "solver = " << c.solver << '\n'
     << "budget = " << c.budget << '\n'
     << "format = " << c.format << '\n'
     << "out = " << c.out << '\n'
     << "timings = " << b(c.timings) << '\n'
     << "exhaustive = " << b(c.exhaustive) << '\n'
     << "dt = " << format_double(c.dt) << '\n'
     << "world_half_extent = " << format_double(c.world_half_extent) << '\n'
     << "sigma_init = " << format_double(c.sigma_init) << '\n'
     << "target_sigma = " << format_double(c.target_sigma) << '\n'
     << "sigma_r0 = " << format_double(c.sigma_r0) << '\n'
     << "kappa_r = " << format_double(c.kappa_r) << '\n'
     << "sigma_b0 = " << format_double(c.sigma_b0) << '\n'
     << "kappa_b = " << format_double(c.kappa_b) << '\n';
  return os.str();
}

SensorKind parse_sensor(const std::string& name, int n) {
  if (name == "auto") return n == 1 ? SensorKind::kRangeBearing : SensorKind::kRangeOnly;
  if (name == "range-bearing") return SensorKind::kRangeBearing;
  if (name == "range") return SensorKind::kRangeOnly;
  if (name == "bearing") return SensorKind::kBearingOnly;
  throw ConfigError("unknown sensor '" + name + "'");
}

QualityMetric parse_metric(const std::string& name) {
  if (name == "trace") return QualityMetric::kTraceReduction;
  if (name == "logdet") return QualityMetric::kLogDetReduction;
  if (name == "maxeig") return QualityMetric::kMaxEigReduction;
  throw ConfigError("unknown metric '" + name + "'");
}

Solver parse_solver(const std::string& name) {
  if (name == "greedy") return Solver::kGreedy;
  if (name == "exhaustive") return Solver::kExhaustive;
  if (name == "random") return Solver::kRandom;
  throw ConfigError("unknown solver '" + name + "'");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw ConfigError("unknown format '" + name + "'");
}

ScenarioOptions scenario_options(const RunConfig& cfg, int num_targets) {
  ScenarioOptions o;
  o.tuple_size = cfg.n;
  o.num_targets = num_targets;
  o.num_robots = cfg.robots > 0 ? cfg.robots : cfg.n * num_targets;
  o.actions_per_robot = cfg.actions;
  o.sensor.kind = parse_sensor(cfg.sensor, cfg.n);
  o.sensor.sigma_r0 = cfg.sigma_r0;
  o.sensor.kappa_r = cfg.kappa_r;
  o.sensor.sigma_b0 = cfg.sigma_b0;
  o.sensor.kappa_b = cfg.kappa_b;
  o.motion.dt = cfg.dt;
  o.motion.world_half_extent = cfg.world_half_extent;
  o.metric = parse_metric(cfg.metric);
  o.sigma_init = cfg.sigma_init;
  o.target_sigma = cfg.target_sigma;
  return o;
}

ComparisonConfig comparison_config(const RunConfig& cfg) {
  ComparisonConfig c;
  c.tuple_size = cfg.n;
  c.m_min = cfg.m_min;
  c.m_max = cfg.m_max;
  c.trials = cfg.trials;
  c.seed = cfg.seed;
  c.budget = cfg.budget;
  c.run_exhaustive = cfg.exhaustive;
  // Comparisons always use N = n * M; `robots` only applies to track.
  c.scenario = scenario_options(cfg, cfg.m_min);
  c.extra_robots = 0;
  return c;
}

}  // namespace ratrack::cli
