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

#include "ratrack/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

namespace ratrack {
namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

Assignment solve(const Scenario& s, Solver solver, const QualityFn& q,
                 std::uint64_t budget, Rng& random_rng) {
  switch (solver) {
    case Solver::kGreedy:
      return greedy_assign(s.tuple_size, s.roster, s.num_targets(), q);
    case Solver::kExhaustive:
      return exhaustive_assign(s.tuple_size, s.roster, s.num_targets(), q, budget);
    case Solver::kRandom:
      return random_assign(s.tuple_size, s.roster, s.num_targets(), q, random_rng);
  }
  throw std::invalid_argument("unknown solver");
}

}  // namespace

std::vector<std::pair<double, double>> default_action_commands() {
  return {{0.0, 0.0},  {1.5, 0.0},  {-1.5, 0.0},
          {1.5, 0.7},  {1.5, -0.7}, {-1.5, 0.7},
          {-1.5, -0.7}, {0.0, 0.7}, {0.0, -0.7}};
}

void ScenarioOptions::validate() const {
  check_feasible(tuple_size, num_robots, num_targets);
  if (actions_per_robot < 1 ||
      actions_per_robot > static_cast<int>(default_action_commands().size())) {
    throw std::invalid_argument("actions_per_robot must be in 1..9");
  }
  if (sensor.kind == SensorKind::kRangeBearing && tuple_size != 1) {
    throw std::invalid_argument("range-bearing sensing is single-robot (n = 1)");
  }
  sensor.validate();
  motion.validate();
  if (!(sigma_init > 0.0)) throw std::invalid_argument("sigma_init must be > 0");
  if (!(target_sigma >= 0.0)) throw std::invalid_argument("target_sigma must be >= 0");
  if (target_rates.empty()) throw std::invalid_argument("target_rates is empty");
}

Scenario generate_scenario(std::uint64_t seed, const ScenarioOptions& opts) {
  opts.validate();
  Scenario s;
  s.seed = seed;
  s.sensor = opts.sensor;
  s.motion = opts.motion;
  s.tuple_size = opts.tuple_size;
  s.metric = opts.metric;
  s.sigma_init = opts.sigma_init;

  auto commands = default_action_commands();
  commands.resize(opts.actions_per_robot);
  s.roster = ActionRoster::uniform(opts.num_robots, commands);

  Rng rng = stream_rng(seed, Stream::kScenario);
  const double h = opts.motion.world_half_extent;
  std::uniform_real_distribution<double> coord(-h, h);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_int_distribution<std::size_t> rate_pick(0, opts.target_rates.size() - 1);

  for (int i = 0; i < opts.num_robots; ++i) {
    const double x1 = coord(rng);
    const double x2 = coord(rng);
    const double theta = angle(rng);
    s.robots.emplace_back(i, x1, x2, theta);
  }
  for (int j = 0; j < opts.num_targets; ++j) {
    TargetTruth t;
    t.id = j;
    t.pos.x() = coord(rng);
    t.pos.y() = coord(rng);
    t.phase = wrap_angle(angle(rng));
    t.omega = opts.target_rates[rate_pick(rng)];
    t.v = opts.target_speed;
    t.sigma = opts.target_sigma;
    s.targets.push_back(t);
  }
  return s;
}

std::vector<TargetBelief> initial_beliefs(const Scenario& s) {
  std::vector<TargetBelief> out;
  out.reserve(s.targets.size());
  for (const TargetTruth& t : s.targets) {
    Rng rng = stream_rng(s.seed, Stream::kBeliefInit, t.id);
    std::normal_distribution<double> offset(0.0, s.sigma_init);
    const double e1 = offset(rng);
    const double e2 = offset(rng);
    TargetBelief b;
    b.id = t.id;
    b.mean = t.pos + Vec2(e1, e2);
    b.cov = s.sigma_init * s.sigma_init * Mat2::Identity();
    out.push_back(b);
  }
  return out;
}

Assignment random_assign(int n, const ActionRoster& roster, int num_targets,
                         const QualityFn& q, Rng& rng) {
  check_feasible(n, roster.num_robots(), num_targets);
  std::vector<int> robots(roster.num_robots());
  for (int i = 0; i < roster.num_robots(); ++i) robots[i] = i;
  std::shuffle(robots.begin(), robots.end(), rng);

  Assignment out;
  out.tuple_size = n;
  out.per_target.resize(num_targets);
  for (int j = 0; j < num_targets; ++j) {
    std::vector<int> chosen(robots.begin() + j * n, robots.begin() + (j + 1) * n);
    std::sort(chosen.begin(), chosen.end());
    for (int r : chosen) {
      const auto& acts = roster.actions(r);
      std::uniform_int_distribution<std::size_t> pick(0, acts.size() - 1);
      out.per_target[j].push_back(acts[pick(rng)]);
    }
    out.total_quality += q(out.per_target[j], j);
  }
  return out;
}

Metrics compute_metrics(const std::vector<TargetBelief>& beliefs,
                        const std::vector<TargetTruth>& truths) {
  if (beliefs.size() != truths.size()) {
    throw std::invalid_argument("compute_metrics: belief/truth count mismatch");
  }
  Metrics m;
  const std::size_t count = beliefs.size();
  m.trace.reserve(count);
  m.error.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    m.trace.push_back(beliefs[j].cov.trace());
    m.error.push_back((beliefs[j].mean - truths[j].pos).norm());
  }
  if (count > 0) {
    for (std::size_t j = 0; j < count; ++j) {
      m.mean_trace += m.trace[j];
      m.err_t += m.error[j];
    }
    m.mean_trace /= static_cast<double>(count);
    m.err_t /= static_cast<double>(count);
  }
  return m;
}

TrackingResult run_tracking(const Scenario& s, Solver solver, int steps,
                            const TrackingOptions& opts) {
  if (steps < 1) throw std::invalid_argument("run_tracking: steps must be >= 1");
  check_feasible(s.tuple_size, s.num_robots(), s.num_targets());
  const int num_targets = s.num_targets();
  const double dt = s.motion.dt;

  std::vector<RobotState> robots = s.robots;
  std::vector<TargetTruth> truths = s.targets;
  std::vector<TargetBelief> beliefs = initial_beliefs(s);

  std::vector<Rng> process_rng;
  std::vector<Rng> measure_rng;
  for (int j = 0; j < num_targets; ++j) {
    process_rng.push_back(stream_rng(s.seed, Stream::kProcessNoise, j));
    measure_rng.push_back(stream_rng(s.seed, Stream::kMeasurement, j));
  }
  Rng solver_rng = stream_rng(s.seed, Stream::kRandomSolver);

  TrackingResult result;
  result.initial = compute_metrics(beliefs, truths);
  result.steps.reserve(steps);

  for (int step = 1; step <= steps; ++step) {
    // Belief and ground truth advance together so the measurement below
    // observes the state the prediction refers to.
    for (int j = 0; j < num_targets; ++j) {
      beliefs[j] = predict(beliefs[j], truths[j], dt);
      truths[j] = target_step_sample(truths[j], dt, process_rng[j]);
    }

    const QualityFn q = [&](std::span<const Action> tuple, int target) {
      return evaluate_candidate(tuple, robots, beliefs[target], s.sensor, s.motion,
                                s.metric);
    };
    const Assignment assignment = solve(s, solver, q, opts.budget, solver_rng);
    if (!validate_assignment(assignment, s.roster, num_targets).empty()) {
      throw std::logic_error("solver produced an infeasible assignment");
    }

    StepRecord rec;
    rec.step = step;
    rec.total_quality = assignment.total_quality;

    std::vector<char> busy(robots.size(), 0);
    std::vector<RobotState> next = robots;
    for (const auto& tuple : assignment.per_target) {
      for (const Action& a : tuple) {
        busy[a.robot_id] = 1;
        next[a.robot_id] = robot_step(robots[a.robot_id], a, dt);
      }
    }
    for (std::size_t i = 0; i < robots.size(); ++i) {
      if (busy[i]) continue;
      const IdleAction idle = idle_action(s.roster, static_cast<int>(i));
      if (idle.fallback) ++rec.idle_fallbacks;
      next[i] = robot_step(robots[i], idle.action, dt);
    }
    robots = std::move(next);

    for (int j = 0; j < num_targets; ++j) {
      std::vector<RobotState> sensing;
      std::vector<int> ids;
      std::vector<int> acts;
      for (const Action& a : assignment.per_target[j]) {
        sensing.push_back(robots[a.robot_id]);
        ids.push_back(a.robot_id);
        acts.push_back(a.action_idx);
      }
      rec.robot_ids.push_back(std::move(ids));
      rec.action_ids.push_back(std::move(acts));
      try {
        const ObservationModel obs = build_observation(sensing, beliefs[j].mean, s.sensor);
        const Eigen::VectorXd z =
            sample_measurement(sensing, truths[j].pos, s.sensor, measure_rng[j]);
        const Eigen::VectorXd z_pred =
            predict_measurement(sensing, beliefs[j].mean, s.sensor);
        beliefs[j] = update(beliefs[j], obs, z, z_pred);
      } catch (const DegenerateGeometryError&) {
        // A co-located sensor gives no usable measurement this step.
      }
    }

    rec.metrics = compute_metrics(beliefs, truths);
    rec.beliefs = beliefs;
    rec.truths = truths;
    result.steps.push_back(std::move(rec));
  }
  return result;
}

double quality_ratio(double num, double den) {
  if (den == 0.0) return num == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return num / den;
}

ComparisonRecord compare_instance(int num_targets, std::uint64_t seed,
                                  const ComparisonConfig& cfg) {
  ScenarioOptions opts = cfg.scenario;
  opts.tuple_size = cfg.tuple_size;
  opts.num_targets = num_targets;
  opts.num_robots = cfg.tuple_size * num_targets + cfg.extra_robots;
  const Scenario s = generate_scenario(seed, opts);

  std::vector<TargetBelief> beliefs = initial_beliefs(s);
  for (int j = 0; j < s.num_targets(); ++j) {
    beliefs[j] = predict(beliefs[j], s.targets[j], s.motion.dt);
  }
  const QualityFn q = make_quality_fn(s.robots, beliefs, s.sensor, s.motion, s.metric);

  ComparisonRecord rec;
  rec.n = s.tuple_size;
  rec.num_robots = s.num_robots();
  rec.num_targets = s.num_targets();
  rec.actions = opts.actions_per_robot;
  rec.seed = seed;

  auto start = std::chrono::steady_clock::now();
  rec.q_greedy = greedy_assign(s.tuple_size, s.roster, s.num_targets(), q).total_quality;
  rec.t_greedy_s = seconds_since(start);

  if (cfg.run_exhaustive) {
    const BigCount count = count_combinations(s.tuple_size, s.roster, s.num_targets());
    if (count <= BigCount(cfg.budget)) {
      start = std::chrono::steady_clock::now();
      rec.q_opt = exhaustive_assign(s.tuple_size, s.roster, s.num_targets(), q,
                                    cfg.budget)
                      .total_quality;
      rec.t_opt_s = seconds_since(start);
      rec.ratio_opt = quality_ratio(rec.q_greedy, *rec.q_opt);
    } else {
      rec.skip_reason = "exhaustive skipped: " + count.str() +
                        " combinations exceed budget " + std::to_string(cfg.budget);
    }
  } else {
    rec.skip_reason = "exhaustive disabled";
  }

  start = std::chrono::steady_clock::now();
  rec.q_bound = relaxed_upper_bound(s.tuple_size, s.roster, s.num_targets(), q);
  rec.t_bound_s = seconds_since(start);
  rec.ratio_bound = quality_ratio(rec.q_greedy, rec.q_bound);
  return rec;
}

ComparisonResult run_comparison(const ComparisonConfig& cfg) {
  if (cfg.m_min < 1 || cfg.m_max < cfg.m_min) {
    throw std::invalid_argument("run_comparison: need 1 <= m_min <= m_max");
  }
  if (cfg.trials < 1) throw std::invalid_argument("run_comparison: trials must be >= 1");

  ComparisonResult out;
  for (int m = cfg.m_min; m <= cfg.m_max; ++m) {
    ComparisonSummary sum;
    sum.num_targets = m;
    double opt_acc = 0.0;
    for (int trial = 0; trial < cfg.trials; ++trial) {
      ComparisonRecord rec = compare_instance(m, cfg.seed + trial, cfg);
      ++sum.trials;
      sum.mean_ratio_bound += rec.ratio_bound;
      if (rec.ratio_opt) {
        ++sum.opt_trials;
        opt_acc += *rec.ratio_opt;
      }
      out.records.push_back(std::move(rec));
    }
    sum.mean_ratio_bound /= sum.trials;
    if (sum.opt_trials > 0) sum.mean_ratio_opt = opt_acc / sum.opt_trials;
    out.summary.push_back(sum);
  }
  std::stable_sort(out.records.begin(), out.records.end(),
                   [](const ComparisonRecord& a, const ComparisonRecord& b) {
                     if (a.num_targets != b.num_targets) return a.num_targets < b.num_targets;
                     return a.seed < b.seed;
                   });
  return out;
}

}  // namespace ratrack
