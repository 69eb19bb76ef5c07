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

#ifndef BALANS_REPORT_H_
#define BALANS_REPORT_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "balans/engine.h"

namespace balans {

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

// iteration,wall_time_s,arm,candidate_obj,outcome,accepted,current_obj,
// best_obj,temperature
void write_trace_csv(std::ostream& out, const SearchTrace& trace);

// level,label,count,percentage with level "arm" or "operator".
void write_arm_csv(std::ostream& out, const SearchTrace& trace);

struct BenchRow {
  std::string instance;
  std::string family;
  std::string seed;
  std::string status;
  std::optional<double> best_obj;
  std::optional<double> v_star;
  bool v_star_certified = false;
  double pg_final = 1.0;
  double pi = 0.0;
  std::optional<double> time_to_first_feasible;
  long iterations = 0;
  std::string error;
};

// Splits "family_seed_k" file stems; family and seed are empty otherwise.
void infer_family_and_seed(const std::string& stem, std::string& family,
                           std::string& seed);

// instance,family,seed,pg_final,pi,time_to_first_feasible,status,best_obj,
// v_star,v_star_certified,iterations,error; followed by "mean" and "std"
// rows over pg_final and pi (population standard deviation).
void write_summary_csv(std::ostream& out, const std::vector<BenchRow>& rows);

// Mean and population standard deviation.
std::pair<double, double> mean_and_std(const std::vector<double>& values);

}  // namespace balans

#endif  // BALANS_REPORT_H_
