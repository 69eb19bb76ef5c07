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

#ifndef BALANS_MPS_H_
#define BALANS_MPS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "balans/mip.h"

namespace balans {

// Parses free-format MPS (fixed-format files parse as long as names contain
// no blanks). Maximization (OBJSENSE MAX) is negated into minimization.
// RANGES on a row split it into a >= and a <= constraint. Throws ParseError
// carrying the offending line number.
MipInstance parse_mps(std::string_view text);
MipInstance read_mps_file(const std::filesystem::path& path);

// Emits free-format MPS in declaration order. Integer and binary columns sit
// between MARKER INTORG/INTEND pairs and get explicit bounds, so that
// parse_mps(write_mps(i)) == i.
std::string write_mps(const MipInstance& instance);
void write_mps_file(const MipInstance& instance,
                    const std::filesystem::path& path);

// "name value" per line; '#' starts a comment; an "objective <value>" line
// records the objective. A comment of the form "# status <word>" is kept as
// the status.
struct SolutionFile {
  std::map<std::string, double> values;
  std::optional<double> objective;
  std::optional<std::string> status;
};

SolutionFile parse_solution_file(std::string_view text);
SolutionFile read_solution_file(const std::filesystem::path& path);

std::string write_solution_file(const MipInstance& instance,
                                std::span<const double> values,
                                std::optional<double> objective,
                                std::string_view status = {});

// Dense assignment over `instance` from a parsed file; unmentioned variables
// are 0. Names unknown to the instance raise ParseError.
std::vector<double> to_dense(const SolutionFile& file,
                             const MipInstance& instance);

}  // namespace balans

#endif  // BALANS_MPS_H_
