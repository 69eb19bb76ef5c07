// Copyright 2026 The Balans Authors
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

#include "balans/report.h"

#include <charconv>
#include <cmath>

#include "balans/metrics.h"

namespace balans {
namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string optional_number(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

void write_trace_csv(std::ostream& out, const SearchTrace& trace) {
  out << "iteration,wall_time_s,arm,candidate_obj,outcome,accepted,"
         "current_obj,best_obj,temperature\n";
  for (const TraceEvent& e : trace.events) {
    out << e.iteration << ',' << format_double(e.time) << ','
        << csv_field(e.arm) << ',' << optional_number(e.candidate_obj) << ','
        << to_string(e.outcome) << ',' << (e.accepted ? 1 : 0) << ','
        << format_double(e.current_obj) << ',' << format_double(e.best_obj)
        << ',' << format_double(e.temperature) << '\n';
  }
}

void write_arm_csv(std::ostream& out, const SearchTrace& trace) {
  out << "level,label,count,percentage\n";
  for (bool grouped : {false, true}) {
    for (const ArmShare& s : arm_distribution(trace, grouped)) {
      out << (grouped ? "operator" : "arm") << ',' << csv_field(s.label) << ','
          << s.count << ',' << format_double(s.percentage) << '\n';
    }
  }
}

void infer_family_and_seed(const std::string& stem, std::string& family,
                           std::string& seed) {
  family.clear();
  seed.clear();
  const std::size_t first = stem.find('_');
  if (first == std::string::npos) return;
  const std::size_t second = stem.find('_', first + 1);
  const std::string head = stem.substr(0, first);
  const std::string mid = stem.substr(
      first + 1, second == std::string::npos ? std::string::npos
                                             : second - first - 1);
  if (mid.empty() || mid.find_first_not_of("0123456789") != std::string::npos) {
    return;
  }
  family = head;
  seed = mid;
}

std::pair<double, double> mean_and_std(const std::vector<double>& values) {
  if (values.empty()) return {0.0, 0.0};
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(values.size());
  return {mean, std::sqrt(var)};
}

void write_summary_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "instance,family,seed,pg_final,pi,time_to_first_feasible,status,"
         "best_obj,v_star,v_star_certified,iterations,error\n";
  std::vector<double> pg, pi;
  for (const BenchRow& r : rows) {
    out << csv_field(r.instance) << ',' << csv_field(r.family) << ','
        << csv_field(r.seed) << ',' << format_double(r.pg_final) << ','
        << format_double(r.pi) << ',' << optional_number(r.time_to_first_feasible)
        << ',' << r.status << ',' << optional_number(r.best_obj) << ','
        << optional_number(r.v_star) << ',' << (r.v_star_certified ? 1 : 0)
        << ',' << r.iterations << ',' << csv_field(r.error) << '\n';
    if (r.error.empty()) {
      pg.push_back(r.pg_final);
      pi.push_back(r.pi);
    }
  }
  const auto [pg_mean, pg_std] = mean_and_std(pg);
  const auto [pi_mean, pi_std] = mean_and_std(pi);
  out << "mean,,," << format_double(pg_mean) << ',' << format_double(pi_mean)
      << ",,,,,,," << '\n';
  out << "std,,," << format_double(pg_std) << ',' << format_double(pi_std)
      << ",,,,,,," << '\n';
}

}  // namespace balans
