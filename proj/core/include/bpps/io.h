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

// Text formats.
//
// Instance (whitespace separated, one record per line, 1-based):
//   n m d r
//   s_c f_c        (m lines, c = 1..m)
//   w_i c_i        (n lines, i = 1..n)
//
// Solution:
//   k total_cost
//   <sorted item ids of one bin>   (k lines, bins by smallest item id)
//
// Blank lines are ignored. Canonical output uses single spaces and a
// trailing newline.

#ifndef BPPS_IO_H_
#define BPPS_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "bpps/model.h"
#include "bpps/two_phase.h"

namespace bpps {

// Parses and validates. Throws ParseError carrying the offending line for
// malformed tokens, count mismatches and invariant violations.
Instance ParseInstance(std::string_view text);
std::string FormatInstance(const Instance& instance);

struct ParsedSolution {
  Solution solution;
  Cost declared_cost = 0;
};

// Syntax only; check against an instance with ValidateSolution().
ParsedSolution ParseSolution(std::string_view text);
// Canonical form with the cost computed from `instance`.
std::string FormatSolution(const Instance& instance, const Solution& solution);

// Phase-1 bins, merge events and final bins of a two-phase run:
//   phase1 <k>            followed by k bin lines
//   merges <e>            followed by e lines "<first> <second> <load>"
//   final <k2>            followed by k2 bin lines
std::string FormatTrace(const PhaseTrace& trace);

// Whole-file helpers. Throw std::runtime_error on I/O failure.
std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

Instance ReadInstanceFile(const std::filesystem::path& path);

}  // namespace bpps

#endif  // BPPS_IO_H_
