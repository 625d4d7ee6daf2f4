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

// Command-line front end: run configuration, result emission and the
// track / compare / count commands.

#ifndef RATRACK_CLI_HPP_
#define RATRACK_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratrack/sim.hpp"

namespace ratrack::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kInfeasible = 3,
  kBudgetRefused = 4,
  kIoError = 5,
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { kCsv, kJson };

// Flat key = value configuration. Keys are documented in README.md.
struct RunConfig {
  std::uint64_t seed = 1;
  int n = 1;
  int robots = 0;  // 0: n * targets
  int targets = 4;
  int actions = 9;
  int steps = 100;
  int trials = 10;
  int m_min = 1;
  int m_max = 4;
  std::string sensor = "auto";  // auto | range-bearing | range | bearing
  std::string metric = "trace"; // trace | logdet | maxeig
  std::string solver = "greedy";  // greedy | exhaustive | random
  std::uint64_t budget = kDefaultExhaustiveBudget;
  std::string format = "csv";
  std::string out;  // empty: stdout
  bool timings = true;
  bool exhaustive = true;
  double dt = 0.5;
  double world_half_extent = 10.0;
  double sigma_init = 1.0;
  double target_sigma = 0.1;
  double sigma_r0 = 0.25;
  double kappa_r = 0.03;
  double sigma_b0 = 0.02;
  double kappa_b = 0.004;

  bool operator==(const RunConfig&) const = default;
};

// Throws ConfigError on unknown keys or malformed values.
RunConfig parse_run_config(const std::string& text);
std::string emit_run_config(const RunConfig& cfg);

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value);

SensorKind parse_sensor(const std::string& name, int n);
QualityMetric parse_metric(const std::string& name);
Solver parse_solver(const std::string& name);
OutputFormat parse_format(const std::string& name);

ScenarioOptions scenario_options(const RunConfig& cfg, int num_targets);
ComparisonConfig comparison_config(const RunConfig& cfg);

// 17 significant digits.
std::string format_double(double x);

inline constexpr const char* kTrackHeader =
    "step,target_id,trace,err,mean_err,total_quality,assigned_robots,assigned_actions";
inline constexpr const char* kCompareHeader =
    "n,N,M,A,seed,q_greedy,q_opt,q_bound,ratio_opt,ratio_bound,t_greedy_s,t_opt_s,t_bound_s";
inline constexpr const char* kSummaryHeader =
    "M,trials,opt_trials,mean_ratio_opt,mean_ratio_bound";

void write_track_csv(std::ostream& os, const TrackingResult& r);
void write_track_json(std::ostream& os, const TrackingResult& r);
// Timing columns are left empty when `timings` is false.
void write_compare_csv(std::ostream& os, const ComparisonResult& r, bool timings);
void write_compare_json(std::ostream& os, const ComparisonResult& r, bool timings);

// Comma-separated rows; a blank line yields an empty row.
std::vector<std::vector<std::string>> read_csv(std::istream& is);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratrack::cli

#endif  // RATRACK_CLI_HPP_
