// Copyright 2026 The BPPS Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BPPS_ERRORS_H_
#define BPPS_ERRORS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "bpps/model.h"

namespace bpps {

// Bad caller input: empty item sets, out-of-range ids, unknown algorithm
// names, generator parameters outside a family's domain.
class InvalidArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An item is heavier than the capacity it is being packed into.
class InfeasibleItemError : public InvalidArgumentError {
 public:
  using InvalidArgumentError::InvalidArgumentError;
};

// Text input could not be turned into a valid instance or solution. `line`
// is 1-based; 0 means the error is not tied to a single line. `source`
// names the file, when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& detail,
             const std::string& source = "")
      : std::runtime_error(Format(line, detail, source)),
        line_(line),
        detail_(detail),
        source_(source) {}

  int line() const { return line_; }
  const std::string& detail() const { return detail_; }
  const std::string& source() const { return source_; }

 private:
  static std::string Format(int line, const std::string& detail,
                            const std::string& source) {
    std::string out = source.empty() ? "" : source + ": ";
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    return out + detail;
  }

  int line_;
  std::string detail_;
  std::string source_;
};

// The exact oracle hit its node or size limit. Carries the best solution
// found so far, if the search got that far.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& message,
                     std::optional<Solution> incumbent = std::nullopt)
      : std::runtime_error(message), incumbent_(std::move(incumbent)) {}

  const std::optional<Solution>& incumbent() const { return incumbent_; }

 private:
  std::optional<Solution> incumbent_;
};

}  // namespace bpps

#endif  // BPPS_ERRORS_H_
