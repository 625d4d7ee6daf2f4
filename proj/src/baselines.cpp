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

#include "ratrack/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace ratrack {
namespace {

BigCount factorial(int k) {
  BigCount f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

BigCount count_from_sizes(int n, const std::vector<std::size_t>& sizes,
                          int num_targets) {
  check_feasible(n, static_cast<int>(sizes.size()), num_targets);
  const int used = n * num_targets;
  // e[k] = sum over k-subsets of robots of the product of their action counts.
  std::vector<BigCount> e(used + 1, 0);
  e[0] = 1;
  for (std::size_t s : sizes) {
    for (int k = used; k >= 1; --k) e[k] += e[k - 1] * s;
  }
  // A fixed set of n*M robots splits into M labeled n-tuples in
  // (nM)! / (n!)^M ways.
  BigCount groups = factorial(used);
  const BigCount nf = factorial(n);
  for (int m = 0; m < num_targets; ++m) groups /= nf;
  return e[used] * groups;
}

// q(tuple, target) for every tuple on distinct robots, keyed by the tuple's
// mixed-radix code over flat action indices.
class TupleTable {
 public:
  TupleTable(int n, const ActionRoster& roster, int num_targets, const QualityFn& q,
             std::uint64_t& evaluations) {
    offset_.resize(roster.num_robots() + 1, 0);
    for (int r = 0; r < roster.num_robots(); ++r) {
      offset_[r + 1] = offset_[r] + roster.actions(r).size();
    }
    radix_ = offset_.back();

    // radix^n must fit in 64 bits for the key.
    long double span = 1.0L;
    for (int l = 0; l < n; ++l) span *= static_cast<long double>(radix_);
    if (span > 1.8e19L) throw BudgetExceededError("tuple key space too large");
    dense_ = span * num_targets <= static_cast<long double>(1u << 23);
    if (dense_) {
      dense_table_.assign(static_cast<std::size_t>(span) * num_targets, 0.0);
      stride_ = static_cast<std::size_t>(span);
    } else {
      sparse_table_.resize(num_targets);
    }

    std::vector<int> all(roster.num_robots());
    for (int r = 0; r < roster.num_robots(); ++r) all[r] = r;
    for (int j = 0; j < num_targets; ++j) {
      for_each_tuple(n, all, roster, [&](std::span<const Action> tuple) {
        std::uint64_t key = 0;
        for (const Action& a : tuple) key = key * radix_ + flat(a);
        const double value = q(tuple, j);
        ++evaluations;
        if (dense_) {
          dense_table_[j * stride_ + key] = value;
        } else {
          sparse_table_[j].emplace(key, value);
        }
      });
    }
  }

  std::uint64_t flat(const Action& a) const { return offset_[a.robot_id] + a.action_idx; }
  std::uint64_t radix() const { return radix_; }

  double at(int target, std::uint64_t key) const {
    if (dense_) return dense_table_[target * stride_ + key];
    return sparse_table_[target].at(key);
  }

 private:
  std::vector<std::uint64_t> offset_;
  std::uint64_t radix_ = 0;
  bool dense_ = true;
  std::size_t stride_ = 0;
  std::vector<double> dense_table_;
  std::vector<std::unordered_map<std::uint64_t, double>> sparse_table_;
};

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(int n, const ActionRoster& roster, int num_targets,
                   const TupleTable& table)
      : n_(n),
        roster_(roster),
        num_targets_(num_targets),
        table_(table),
        used_(roster.num_robots(), 0),
        current_(num_targets, std::vector<Action>(n)) {}

  void run() { place_target(0, 0.0); }

  std::uint64_t leaves() const { return leaves_; }
  bool found() const { return found_; }
  double best() const { return best_; }
  const std::vector<std::vector<Action>>& best_tuples() const { return best_tuples_; }

 private:
  void place_target(int target, double partial) {
    if (target == num_targets_) {
      ++leaves_;
      // Enumeration runs in lexicographic order, so a strict comparison
      // keeps the smallest key among equal totals.
      if (!found_ || partial > best_) {
        found_ = true;
        best_ = partial;
        best_tuples_ = current_;
      }
      return;
    }
    fill_tuple(target, 0, 0, 0, partial);
  }

  void fill_tuple(int target, int depth, int start, std::uint64_t key,
                  double partial) {
    if (depth == n_) {
      place_target(target + 1, partial + table_.at(target, key));
      return;
    }
    const int num_robots = roster_.num_robots();
    for (int r = start; r < num_robots; ++r) {
      if (used_[r]) continue;
      used_[r] = 1;
      for (const Action& a : roster_.actions(r)) {
        current_[target][depth] = a;
        fill_tuple(target, depth + 1, r + 1, key * table_.radix() + table_.flat(a),
                   partial);
      }
      used_[r] = 0;
    }
  }

  int n_;
  const ActionRoster& roster_;
  int num_targets_;
  const TupleTable& table_;
  std::vector<char> used_;
  std::vector<std::vector<Action>> current_;

  std::uint64_t leaves_ = 0;
  bool found_ = false;
  double best_ = 0.0;
  std::vector<std::vector<Action>> best_tuples_;
};

}  // namespace

BigCount count_combinations(int n, int num_robots, int num_targets,
                            int actions_per_robot) {
  if (actions_per_robot < 1) {
    throw std::invalid_argument("count_combinations: need >= 1 action per robot");
  }
  if (num_robots < 0) throw InfeasibleError("negative robot count");
  return count_from_sizes(
      n, std::vector<std::size_t>(num_robots, static_cast<std::size_t>(actions_per_robot)),
      num_targets);
}

BigCount count_combinations(int n, const ActionRoster& roster, int num_targets) {
  std::vector<std::size_t> sizes;
  for (const auto& acts : roster.per_robot) sizes.push_back(acts.size());
  return count_from_sizes(n, sizes, num_targets);
}

Assignment exhaustive_assign(int n, const ActionRoster& roster, int num_targets,
                             const QualityFn& q, std::uint64_t budget,
                             ExhaustiveStats* stats) {
  const BigCount total = count_combinations(n, roster, num_targets);
  if (total > BigCount(budget)) {
    throw BudgetExceededError("exhaustive search needs " + total.str() +
                              " leaves, budget is " + std::to_string(budget));
  }

  ExhaustiveStats local;
  ExhaustiveStats& st = stats ? *stats : local;
  st = ExhaustiveStats{};

  Assignment out;
  out.tuple_size = n;
  if (num_targets == 0) {
    st.leaves = 1;
    return out;
  }

  const TupleTable table(n, roster, num_targets, q, st.evaluations);
  ExhaustiveSearch search(n, roster, num_targets, table);
  search.run();
  st.leaves = search.leaves();

  out.per_target = search.best_tuples();
  out.total_quality = search.best();
  return out;
}

Matching hungarian_max(const WeightMatrix& w) {
  if (static_cast<std::size_t>(w.rows) * w.cols != w.w.size()) {
    throw std::invalid_argument("hungarian_max: weight storage size mismatch");
  }
  const int k = std::max(w.rows, w.cols);
  Matching out;
  out.left_to_right.assign(w.rows, -1);
  if (k == 0) return out;

  double wmax = 0.0;
  for (double x : w.w) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw std::invalid_argument("hungarian_max: weights must be finite and >= 0");
    }
    wmax = std::max(wmax, x);
  }
  // Min-cost assignment on cost = wmax - w over the zero-padded square
  // matrix; 1-based potentials as in the classic O(k^3) formulation.
  auto cost = [&](int i, int j) {
    const double weight = (i < w.rows && j < w.cols) ? w(i, j) : 0.0;
    return wmax - weight;
  };
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(k + 1, 0.0), v(k + 1, 0.0), minv(k + 1);
  std::vector<int> p(k + 1, 0), way(k + 1, 0);
  std::vector<char> used(k + 1);
  for (int i = 1; i <= k; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= k; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= k; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  for (int j = 1; j <= k; ++j) {
    const int i = p[j] - 1;
    const int col = j - 1;
    if (i < w.rows && col < w.cols) {
      out.left_to_right[i] = col;
      out.value += w(i, col);
    }
  }
  return out;
}

double relaxed_upper_bound(int n, const ActionRoster& roster, int num_targets,
                           const QualityFn& q) {
  check_feasible(n, roster.num_robots(), num_targets);
  if (num_targets == 0) return 0.0;

  std::vector<std::size_t> offset(roster.num_robots() + 1, 0);
  for (int r = 0; r < roster.num_robots(); ++r) {
    offset[r + 1] = offset[r] + roster.actions(r).size();
  }
  const int left = static_cast<int>(offset.back());

  // best[a][j]: max q over tuples containing robot-action a, for target j.
  WeightMatrix best(left, num_targets, 0.0);
  std::vector<int> all(roster.num_robots());
  for (int r = 0; r < roster.num_robots(); ++r) all[r] = r;
  for (int j = 0; j < num_targets; ++j) {
    for_each_tuple(n, all, roster, [&](std::span<const Action> tuple) {
      const double value = std::max(0.0, q(tuple, j));
      for (const Action& a : tuple) {
        double& slot = best(static_cast<int>(offset[a.robot_id] + a.action_idx), j);
        slot = std::max(slot, value);
      }
    });
  }

  WeightMatrix w(left, n * num_targets, 0.0);
  for (int a = 0; a < left; ++a) {
    for (int j = 0; j < num_targets; ++j) {
      for (int c = 0; c < n; ++c) w(a, j * n + c) = best(a, j) / n;
    }
  }
  return hungarian_max(w).value;
}

}  // namespace ratrack
