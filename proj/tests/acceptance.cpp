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


// Acceptance runner. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ratrack/cli.hpp"

namespace {

using namespace ratrack;
using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const Outcome& o, double seconds, double limit) {
  const bool ok = o.pass && (limit <= 0.0 || seconds < limit);
  if (!ok) ++failures;
  std::printf("criterion %d %-28s %s  %s (%.3f s", id, name, ok ? "PASS" : "FAIL",
              o.detail.c_str(), seconds);
  if (limit > 0.0) std::printf(", limit %.3g s", limit);
  std::printf(")\n");
  std::fflush(stdout);
}

std::string run_cli_capture(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cli::run_cli(args, out, err);
  if (code) *code = c;
  return out.str();
}

ScenarioOptions default_options(int n) {
  ScenarioOptions o;
  o.tuple_size = n;
  o.sensor.kind = n == 1 ? SensorKind::kRangeBearing : SensorKind::kRangeOnly;
  return o;
}

// 1. Exact combination counts through the count command.
Outcome combination_counts(double* per_call) {
  Outcome o;
  const std::pair<std::vector<std::string>, std::string> cases[] = {
      {{"count", "1", "8", "8", "9"}, "1735643790720"},
      {{"count", "2", "8", "4", "9"}, "108477736920"},
  };
  double worst = 0.0;
  for (const auto& [args, want] : cases) {
    double best = 1e9;
    std::string got;
    for (int rep = 0; rep < 5; ++rep) {
      const auto start = Clock::now();
      int code = -1;
      const std::string out = run_cli_capture(args, &code);
      best = std::min(best, elapsed(start));
      got = out.substr(0, out.find('\n'));
      if (code != 0) o.pass = false;
    }
    worst = std::max(worst, best);
    if (got != want) o.pass = false;
    o.detail += got + (got == want ? " ok; " : " WRONG; ");
  }
  *per_call = worst;
  return o;
}

struct SuiteStats {
  int instances = 0;
  int bound_violations = 0;
  int sandwich_violations = 0;
};

// 2 and 3. Seeded single-epoch instances, all three solvers per instance.
SuiteStats bound_suite() {
  SuiteStats s;
  auto one = [&](int n, int m, int actions, std::uint64_t seed) {
    ComparisonConfig cfg;
    cfg.tuple_size = n;
    cfg.scenario = default_options(n);
    cfg.scenario.actions_per_robot = actions;
    const ComparisonRecord rec = compare_instance(m, seed, cfg);
    const double opt = rec.q_opt.value();
    ++s.instances;
    if (rec.q_greedy < opt / (n + 1)) ++s.bound_violations;
    const double slack = 1e-9 * std::max(1.0, std::abs(rec.q_bound));
    if (rec.q_greedy > opt + slack || opt > rec.q_bound + slack) ++s.sandwich_violations;
  };
  for (int m = 1; m <= 4; ++m) {
    for (int actions = 1; actions <= 3; ++actions) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) one(1, m, actions, 1000 + seed);
    }
  }
  for (int m = 1; m <= 3; ++m) {
    for (int actions = 1; actions <= 2; ++actions) {
      for (std::uint64_t seed = 0; seed < 35; ++seed) one(2, m, actions, 2000 + seed);
    }
  }
  return s;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

// 4. Mean greedy/optimum ratio per size.
Outcome near_optimality() {
  Outcome o;
  for (int n : {1, 2}) {
    ComparisonConfig cfg;
    cfg.tuple_size = n;
    cfg.m_min = 1;
    cfg.m_max = n == 1 ? 4 : 3;
    cfg.trials = 10;
    cfg.seed = 1;
    cfg.scenario = default_options(n);
    const ComparisonResult r = run_comparison(cfg);
    o.detail += "n=" + std::to_string(n) + " [";
    for (const ComparisonSummary& s : r.summary) {
      const double ratio = s.mean_ratio_opt.value_or(0.0);
      if (s.opt_trials != s.trials || !(ratio >= 0.90)) o.pass = false;
      o.detail += fmt(ratio) + (s.num_targets == cfg.m_max ? "" : " ");
    }
    o.detail += "] ";
  }
  return o;
}

// 5. Mean greedy/bound ratio per size, no exhaustive search.
Outcome bound_ratio_scaling() {
  Outcome o;
  for (int n : {1, 2}) {
    ComparisonConfig cfg;
    cfg.tuple_size = n;
    cfg.m_min = 1;
    cfg.m_max = n == 1 ? 20 : 10;
    cfg.trials = 10;
    cfg.seed = 1;
    cfg.run_exhaustive = false;
    cfg.scenario = default_options(n);
    const ComparisonResult r = run_comparison(cfg);
    double lo = 1e9, hi = 0.0;
    for (const ComparisonSummary& s : r.summary) {
      lo = std::min(lo, s.mean_ratio_bound);
      hi = std::max(hi, s.mean_ratio_bound);
      if (!(s.mean_ratio_bound >= 0.80) || !(s.mean_ratio_bound > 1.0 / (n + 1) + 0.15)) {
        o.pass = false;
      }
    }
    o.detail += "n=" + std::to_string(n) + " mean ratio in [" + fmt(lo) + ", " + fmt(hi) + "] ";
  }
  return o;
}

// 6. Closed-loop tracking, every seed on its own.
Outcome closed_loop() {
  Outcome o;
  struct Setup {
    int n, robots, targets;
    SensorKind kind;
  };
  const Setup setups[] = {{1, 4, 4, SensorKind::kRangeBearing},
                          {2, 6, 3, SensorKind::kRangeOnly}};
  for (const Setup& su : setups) {
    double worst_trace = 0.0, worst_err = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      ScenarioOptions opts = default_options(su.n);
      opts.num_robots = su.robots;
      opts.num_targets = su.targets;
      opts.sensor.kind = su.kind;
      opts.motion.dt = 0.5;
      const TrackingResult r = run_tracking(generate_scenario(seed, opts), Solver::kGreedy, 100);
      const double trace_ratio = r.steps.back().metrics.mean_trace / r.initial.mean_trace;
      double tail = 0.0;
      for (std::size_t k = r.steps.size() - 20; k < r.steps.size(); ++k) {
        tail += r.steps[k].metrics.err_t;
      }
      const double err_ratio = tail / 20.0 / r.initial.err_t;
      worst_trace = std::max(worst_trace, trace_ratio);
      worst_err = std::max(worst_err, err_ratio);
      if (!(trace_ratio < 0.25) || !(err_ratio < 0.5)) o.pass = false;
    }
    o.detail += "n=" + std::to_string(su.n) + " worst trace ratio " + fmt(worst_trace) +
                ", worst err ratio " + fmt(worst_err) + "; ";
  }
  return o;
}

Mat2 random_spd(std::mt19937_64& gen) {
  std::normal_distribution<double> g;
  Mat2 a;
  a << g(gen), g(gen), g(gen), g(gen);
  return a * a.transpose() + 0.05 * Mat2::Identity();
}

ObservationModel random_model(std::mt19937_64& gen, int rows) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.01, 2.0);
  ObservationModel obs;
  obs.H.resize(rows, 2);
  obs.noise_var.resize(rows);
  for (int i = 0; i < rows; ++i) {
    obs.H.row(i) << g(gen), g(gen);
    obs.noise_var(i) = u(gen);
  }
  obs.channels.assign(rows, Channel::kRange);
  return obs;
}

// 7. Numerical kernels against independent references.
Outcome numerical_kernels() {
  Outcome o;
  std::mt19937_64 gen(2026);
  constexpr double kPi = 3.14159265358979323846;

  int jac_bad = 0;
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int checked = 0; checked < 100;) {
    const RobotState r(0, coord(gen), coord(gen), ang(gen));
    const Vec2 y(coord(gen), coord(gen));
    if ((y - r.position()).norm() < 0.5) continue;
    const double h = 1e-6;
    Eigen::RowVector2d fr, fb;
    for (int c = 0; c < 2; ++c) {
      Vec2 yp = y, ym = y;
      yp(c) += h;
      ym(c) -= h;
      fr(c) = (range_measure(r, yp) - range_measure(r, ym)) / (2 * h);
      fb(c) = wrap_angle(bearing_measure(r, yp) - bearing_measure(r, ym)) / (2 * h);
    }
    const Eigen::RowVector2d jr = range_jacobian(r.position(), y);
    const Eigen::RowVector2d jb = bearing_jacobian(r.position(), y);
    if ((jr - fr).norm() > 1e-5 * jr.norm() || (jb - fb).norm() > 1e-5 * jb.norm()) ++jac_bad;
    ++checked;
  }

  int seq_bad = 0;
  for (int t = 0; t < 200; ++t) {
    TargetBelief b;
    b.cov = random_spd(gen);
    const int k = 2 + t % 3;
    const ObservationModel obs = random_model(gen, k);
    Eigen::VectorXd z(k);
    std::normal_distribution<double> g;
    for (int i = 0; i < k; ++i) z(i) = g(gen);
    const TargetBelief stacked = update(b, obs, z, Eigen::VectorXd::Zero(k));
    Eigen::Vector2d x = b.mean;
    Eigen::Matrix2d P = b.cov;
    for (int i = 0; i < k; ++i) {
      const Eigen::RowVector2d hrow = obs.H.row(i);
      const double s = hrow * P * hrow.transpose() + obs.noise_var(i);
      const Eigen::Vector2d kg = P * hrow.transpose() / s;
      x += kg * (z(i) - hrow.dot(x - b.mean));
      P -= kg * hrow * P;
    }
    if ((stacked.cov - P).norm() > 1e-8 || (stacked.mean - x).norm() > 1e-8) ++seq_bad;
  }

  int loewner_bad = 0;
  for (int t = 0; t < 1000; ++t) {
    const Mat2 P = random_spd(gen);
    const Mat2 post = posterior_covariance(P, random_model(gen, 1 + t % 4));
    if (sym_eigenvalues(P - post)(0) < -1e-9) ++loewner_bad;
  }

  int hung_bad = 0;
  std::uniform_int_distribution<int> dim(1, 7);
  std::uniform_real_distribution<double> wgt(0.0, 10.0);
  for (int t = 0; t < 100; ++t) {
    WeightMatrix w(dim(gen), dim(gen));
    for (double& x : w.w) x = wgt(gen);
    const int k = std::max(w.rows, w.cols);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    double best = 0.0;
    do {
      double total = 0.0;
      for (int i = 0; i < w.rows; ++i) {
        if (perm[i] < w.cols) total += w(i, perm[i]);
      }
      best = std::max(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (std::abs(hungarian_max(w).value - best) > 1e-9) ++hung_bad;
  }

  o.pass = jac_bad == 0 && seq_bad == 0 && loewner_bad == 0 && hung_bad == 0;
  o.detail = "jacobian " + std::to_string(jac_bad) + "/100, sequential " +
             std::to_string(seq_bad) + "/200, loewner " + std::to_string(loewner_bad) +
             "/1000, hungarian " + std::to_string(hung_bad) + "/100 mismatches";
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// 8. Same command and seed, byte-identical files.
Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path();
  const std::vector<std::vector<std::string>> commands = {
      {"track", "--seed", "7", "--targets", "4", "--steps", "100"},
      {"track", "--seed", "7", "--n", "2", "--targets", "3", "--steps", "100"},
      {"compare", "--seed", "7", "--m-max", "3", "--trials", "3", "--timings", "off"},
  };
  int idx = 0;
  for (auto args : commands) {
    std::string bodies[2];
    for (int rep = 0; rep < 2; ++rep) {
      const auto path = dir / ("ratrack_acceptance_" + std::to_string(idx) + "_" +
                               std::to_string(rep) + ".csv");
      std::vector<std::string> full = args;
      full.push_back("--out");
      full.push_back(path.string());
      int code = -1;
      run_cli_capture(full, &code);
      if (code != 0) o.pass = false;
      bodies[rep] = slurp(path);
      std::filesystem::remove(path);
    }
    const bool same = !bodies[0].empty() && bodies[0] == bodies[1];
    if (!same) o.pass = false;
    o.detail += args[0] + (same ? " identical; " : " DIFFERS; ");
    ++idx;
  }
  return o;
}

}  // namespace

int main() {
  {
    double per_call = 0.0;
    const Outcome o = combination_counts(&per_call);
    report(1, "combination counts", o, per_call, 1e-3);
  }
  {
    const auto start = Clock::now();
    const SuiteStats s = bound_suite();
    const double t = elapsed(start);
    Outcome bound;
    bound.pass = s.bound_violations == 0 && s.instances >= 400;
    bound.detail = std::to_string(s.bound_violations) + " violations over " +
                   std::to_string(s.instances) + " instances";
    report(2, "approximation bound suite", bound, t, 120.0);
    Outcome sandwich;
    sandwich.pass = s.sandwich_violations == 0 && s.instances >= 400;
    sandwich.detail = std::to_string(s.sandwich_violations) + " violations over " +
                      std::to_string(s.instances) + " instances";
    report(3, "sandwich suite", sandwich, t, 120.0);
  }
  {
    const auto start = Clock::now();
    const Outcome o = near_optimality();
    report(4, "greedy vs optimum", o, elapsed(start), 300.0);
  }
  {
    const auto start = Clock::now();
    const Outcome o = bound_ratio_scaling();
    report(5, "greedy vs matching bound", o, elapsed(start), 600.0);
  }
  {
    const auto start = Clock::now();
    const Outcome o = closed_loop();
    report(6, "closed-loop tracking", o, elapsed(start), 60.0);
  }
  {
    const auto start = Clock::now();
    const Outcome o = numerical_kernels();
    report(7, "numerical kernels", o, elapsed(start), 30.0);
  }
  {
    const auto start = Clock::now();
    const Outcome o = determinism();
    report(8, "determinism", o, elapsed(start), 0.0);
  }
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
