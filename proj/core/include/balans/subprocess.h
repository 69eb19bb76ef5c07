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

#ifndef BALANS_SUBPROCESS_H_
#define BALANS_SUBPROCESS_H_

#include <string>

#include "balans/bnb.h"

namespace balans {

struct CommandResult {
  int exit_code = -1;  // -1 when killed or terminated by a signal
  bool timed_out = false;
  std::string output;  // stdout and stderr, interleaved
};

// Runs `command` through /bin/sh. The process group is killed once
// `time_limit + grace` has elapsed.
CommandResult run_command(const std::string& command, Seconds time_limit,
                          Seconds grace = Seconds(5.0));

// Single-quotes `text` for /bin/sh.
std::string shell_quote(const std::string& text);

}  // namespace balans

#endif  // BALANS_SUBPROCESS_H_
