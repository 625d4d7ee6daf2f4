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

// Scenario generation, closed-loop tracking and the greedy-vs-baseline
// comparison harness.
//
// Every random draw comes from a substream derived from the scenario seed,
// so a (scenario, solver, steps) triple reproduces bit for bit.

#ifndef RATRACK_SIM_HPP_
#define RATRACK_SIM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratrack/assign.hpp"
#include "ratrack/baselines.hpp"
#include "ratrack/core.hpp"
#include "ratrack/filter.hpp"
#include "ratrack/motion.hpp"
#include "ratrack/sensing.hpp"

namespace ratrack {

// Substream tags for derive_seed.
enum class Stream : std::uint64_t {
  kScenario = 1,
  kProcessNoise = 2,
  kMeasurement = 3,
  kBeliefInit = 4,
  kRandomSolver = 5,
};

inline Rng stream_rng(std::uint64_t seed, Stream s, std::uint64_t index = 0) {
  return make_rng(seed, static_cast<std::uint64_t>(s), index);
}

// {0, +-1.5} m/s x {0, +-0.7} rad/s, ordered so that short prefixes still
// contain distinct post-step positions: stay, forward, backward, then turns.
std::vector<std::pair<double, double>> default_action_commands();

struct ScenarioOptions {
  int num_robots = 1;
  int num_targets = 1;
  int tuple_size = 1;
  int actions_per_robot = 9;  // prefix of default_action_commands()
  SensorConfig sensor;
  MotionConfig motion;
  QualityMetric metric = QualityMetric::kTraceReduction;
  double sigma_init = 1.0;    // m
  double target_sigma = 0.1;  // m, process noise std
  double target_speed = 1.2;
  std::vector<double> target_rates = {0.15, 0.2, 0.3, 0.6};

  void validate() const;
};

struct Scenario {
  std::uint64_t seed = 0;
  std::vector<RobotState> robots;
  std::vector<TargetTruth> targets;
  ActionRoster roster;
  SensorConfig sensor;
  MotionConfig motion;
  int tuple_size = 1;
  QualityMetric metric = QualityMetric::kTraceReduction;
  double sigma_init = 1.0;

  int num_robots() const { return static_cast<int>(robots.size()); }
  int num_targets() const { return static_cast<int>(targets.size()); }
};

Scenario generate_scenario(std::uint64_t seed, const ScenarioOptions& opts);

// mean = truth + N(0, sigma_init^2 I), cov = sigma_init^2 I.
std::vector<TargetBelief> initial_beliefs(const Scenario& s);

enum class Solver { kGreedy, kExhaustive, kRandom };

// Uniformly random feasible assignment, scored with q.
Assignment random_assign(int n, const ActionRoster& roster, int num_targets,
                         const QualityFn& q, Rng& rng);

struct Metrics {
  double mean_trace = 0.0;
  double err_t = 0.0;  // mean Euclidean estimation error, m
  std::vector<double> trace;
  std::vector<double> error;
};

Metrics compute_metrics(const std::vector<TargetBelief>& beliefs,
                        const std::vector<TargetTruth>& truths);

struct StepRecord {
  int step = 0;
  std::vector<std::vector<int>> robot_ids;   // per target
  std::vector<std::vector<int>> action_ids;  // per target
  Metrics metrics;
  double total_quality = 0.0;
  int idle_fallbacks = 0;  // idle robots without a null action
  std::vector<TargetBelief> beliefs;
  std::vector<TargetTruth> truths;
};

struct TrackingResult {
  Metrics initial;                 // step 0, before any assignment
  std::vector<StepRecord> steps;   // steps 1..T
};

struct TrackingOptions {
  std::uint64_t budget = kDefaultExhaustiveBudget;
};

TrackingResult run_tracking(const Scenario& s, Solver solver, int steps,
                            const TrackingOptions& opts = {});

struct ComparisonConfig {
  int tuple_size = 1;
  int m_min = 1;
  int m_max = 4;
  int trials = 10;
  int extra_robots = 0;  // N = n*M + extra_robots
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultExhaustiveBudget;
  bool run_exhaustive = true;
  ScenarioOptions scenario;  // sizes are overwritten per instance
};

struct ComparisonRecord {
  int n = 1;
  int num_robots = 0;
  int num_targets = 0;
  int actions = 0;
  std::uint64_t seed = 0;
  double q_greedy = 0.0;
  std::optional<double> q_opt;
  double q_bound = 0.0;
  std::optional<double> ratio_opt;
  double ratio_bound = 0.0;
  double t_greedy_s = 0.0;
  std::optional<double> t_opt_s;
  double t_bound_s = 0.0;
  std::string skip_reason;  // why q_opt is missing
};

struct ComparisonSummary {
  int num_targets = 0;
  int trials = 0;
  int opt_trials = 0;
  std::optional<double> mean_ratio_opt;
  double mean_ratio_bound = 0.0;
};

struct ComparisonResult {
  std::vector<ComparisonRecord> records;  // sorted by (M, seed)
  std::vector<ComparisonSummary> summary; // one per M
};

// One single-epoch instance: fresh scenario, beliefs initialized then
// predicted once, all solvers on the same quality function.
ComparisonRecord compare_instance(int num_targets, std::uint64_t seed,
                                  const ComparisonConfig& cfg);

ComparisonResult run_comparison(const ComparisonConfig& cfg);

// q_a / q_b, with 0/0 read as 1.
double quality_ratio(double num, double den);

}  // namespace ratrack

#endif  // RATRACK_SIM_HPP_
