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

#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "ratrack/cli.hpp"

namespace ratrack::cli {
namespace {

using nlohmann::ordered_json;

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string opt_double(const std::optional<double>& x) {
  return x ? format_double(*x) : std::string();
}

ordered_json opt_json(const std::optional<double>& x) {
  return x ? ordered_json(*x) : ordered_json(nullptr);
}

}  // namespace

void write_track_csv(std::ostream& os, const TrackingResult& r) {
  os << kTrackHeader << '\n';
  for (const StepRecord& rec : r.steps) {
    const std::string mean_err = format_double(rec.metrics.err_t);
    const std::string total = format_double(rec.total_quality);
    for (std::size_t j = 0; j < rec.metrics.trace.size(); ++j) {
      os << rec.step << ',' << j << ',' << format_double(rec.metrics.trace[j]) << ','
         << format_double(rec.metrics.error[j]) << ',' << mean_err << ',' << total
         << ',' << join(rec.robot_ids[j]) << ',' << join(rec.action_ids[j]) << '\n';
    }
    os << rec.step << ",-1," << format_double(rec.metrics.mean_trace) << ','
       << mean_err << ',' << mean_err << ',' << total << ",,\n";
  }
}

void write_track_json(std::ostream& os, const TrackingResult& r) {
  ordered_json rows = ordered_json::array();
  for (const StepRecord& rec : r.steps) {
    for (std::size_t j = 0; j < rec.metrics.trace.size(); ++j) {
      rows.push_back({{"step", rec.step},
                      {"target_id", static_cast<int>(j)},
                      {"trace", rec.metrics.trace[j]},
                      {"err", rec.metrics.error[j]},
                      {"mean_err", rec.metrics.err_t},
                      {"total_quality", rec.total_quality},
                      {"assigned_robots", rec.robot_ids[j]},
                      {"assigned_actions", rec.action_ids[j]}});
    }
    rows.push_back({{"step", rec.step},
                    {"target_id", -1},
                    {"trace", rec.metrics.mean_trace},
                    {"err", rec.metrics.err_t},
                    {"mean_err", rec.metrics.err_t},
                    {"total_quality", rec.total_quality},
                    {"assigned_robots", ordered_json::array()},
                    {"assigned_actions", ordered_json::array()}});
  }
  os << rows.dump(1) << '\n';
}

void write_compare_csv(std::ostream& os, const ComparisonResult& r, bool timings) {
  os << kCompareHeader << '\n';
  for (const ComparisonRecord& c : r.records) {
    os << c.n << ',' << c.num_robots << ',' << c.num_targets << ',' << c.actions << ','
       << c.seed << ',' << format_double(c.q_greedy) << ',' << opt_double(c.q_opt) << ','
       << format_double(c.q_bound) << ',' << opt_double(c.ratio_opt) << ','
       << format_double(c.ratio_bound) << ',';
    if (timings) {
      os << format_double(c.t_greedy_s) << ',' << opt_double(c.t_opt_s) << ','
         << format_double(c.t_bound_s);
    } else {
      os << ",,";
    }
    os << '\n';
  }
  os << '\n' << kSummaryHeader << '\n';
  for (const ComparisonSummary& s : r.summary) {
    os << s.num_targets << ',' << s.trials << ',' << s.opt_trials << ','
       << opt_double(s.mean_ratio_opt) << ',' << format_double(s.mean_ratio_bound)
       << '\n';
  }
}

void write_compare_json(std::ostream& os, const ComparisonResult& r, bool timings) {
  ordered_json records = ordered_json::array();
  for (const ComparisonRecord& c : r.records) {
    ordered_json row = {{"n", c.n},
                        {"N", c.num_robots},
                        {"M", c.num_targets},
                        {"A", c.actions},
                        {"seed", c.seed},
                        {"q_greedy", c.q_greedy},
                        {"q_opt", opt_json(c.q_opt)},
                        {"q_bound", c.q_bound},
                        {"ratio_opt", opt_json(c.ratio_opt)},
                        {"ratio_bound", c.ratio_bound}};
    row["t_greedy_s"] = timings ? ordered_json(c.t_greedy_s) : ordered_json(nullptr);
    row["t_opt_s"] = timings ? opt_json(c.t_opt_s) : ordered_json(nullptr);
    row["t_bound_s"] = timings ? ordered_json(c.t_bound_s) : ordered_json(nullptr);
    records.push_back(std::move(row));
  }
  ordered_json summary = ordered_json::array();
  for (const ComparisonSummary& s : r.summary) {
    summary.push_back({{"M", s.num_targets},
                       {"trials", s.trials},
                       {"opt_trials", s.opt_trials},
                       {"mean_ratio_opt", opt_json(s.mean_ratio_opt)},
                       {"mean_ratio_bound", s.mean_ratio_bound}});
  }
  ordered_json doc = {{"records", records}, {"summary", summary}};
  os << doc.dump(1) << '\n';
}

std::vector<std::vector<std::string>> read_csv(std::istream& is) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> fields;
    if (!line.empty()) {
      std::size_t start = 0;
      while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace ratrack::cli
