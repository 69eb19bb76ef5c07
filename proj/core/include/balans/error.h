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

#ifndef BALANS_ERROR_H_
#define BALANS_ERROR_H_

#include <stdexcept>
#include <string>

namespace balans {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector length does not match the number of variables.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed MIP model (bad bounds, out-of-range indices, ...).
class ModelError : public Error {
 public:
  using Error::Error;
};

// A SubMipDelta that cannot be applied to its base instance.
class InvalidDeltaError : public Error {
 public:
  using Error::Error;
};

// Text input (MPS, solution file, config) could not be parsed. `line()` is
// 1-based, 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Invalid configuration: unknown operator labels, empty portfolios,
// inconsistent reward schemes, ...
class ConfigError : public Error {
 public:
  using Error::Error;
};

// The repair backend failed (subprocess error, unparsable output).
class BackendError : public Error {
 public:
  BackendError(const std::string& message, std::string captured_output = {})
      : Error(message), captured_output_(std::move(captured_output)) {}
  const std::string& captured_output() const { return captured_output_; }

 private:
  std::string captured_output_;
};

// A destroy operator could not build its neighborhood.
class OperatorError : public Error {
 public:
  using Error::Error;
};

}  // namespace balans

#endif  // BALANS_ERROR_H_
