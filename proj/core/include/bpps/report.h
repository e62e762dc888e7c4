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

#ifndef BPPS_REPORT_H_
#define BPPS_REPORT_H_

#include <optional>
#include <string>
#include <string_view>

#include "bpps/model.h"
#include "bpps/rational.h"
#include "bpps/solve.h"

namespace bpps {

inline constexpr std::string_view kCsvHeader =
    "instance,algorithm,bins,cost,reference,ref_source,ratio,bound,wall_ms";

// One (instance, algorithm) measurement against a reference value: the exact
// optimum ("exact") or the weak combinatorial lower bound ("lb-weak").
struct RatioReport {
  std::string instance_id;
  std::string algorithm;
  int bins = 0;
  Cost cost = 0;
  Cost reference = 0;
  std::string ref_source;
  Rational ratio;
  std::optional<Rational> bound;
  std::optional<double> wall_ms;
};

// The guarantee that applies to `algorithm` on `instance`, if any:
//   exact                     -> 1
//   tp-<inner>                -> 2 * alpha(inner)
//   nf, nfd on the NF family  -> n / 2
//   ff, bf, ffd, bfd on the FF/BF family -> (n/3 + 2) / 3
// Family membership is checked by regenerating the family instance.
std::optional<Rational> TheoreticalBound(const AlgorithmId& algorithm,
                                         const Instance& instance);

RatioReport MakeReport(std::string instance_id, const AlgorithmId& algorithm,
                       const Instance& instance, const SolveResult& result,
                       Cost reference, std::string ref_source);

// CSV fields in kCsvHeader order; ratio and bound with 6 decimals, empty
// bound / wall_ms when absent, wall_ms with 3 decimals.
std::string FormatCsvRow(const RatioReport& report);

}  // namespace bpps

#endif  // BPPS_REPORT_H_
