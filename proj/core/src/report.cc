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

#include "bpps/report.h"

#include <cstdio>
#include <utility>

#include "bpps/generators.h"

namespace bpps {

namespace {

bool IsNfFamily(const Instance& instance) {
  const int n = instance.num_items();
  return n >= 4 && n % 2 == 0 &&
         instance == NfWorstInstance(n, instance.bin_cost());
}

bool IsFfBfFamily(const Instance& instance) {
  const int n = instance.num_items();
  return n >= 6 && n % 6 == 0 &&
         instance == FfBfWorstInstance(n, instance.bin_cost());
}

}  // namespace

std::optional<Rational> TheoreticalBound(const AlgorithmId& algorithm,
                                         const Instance& instance) {
  const int n = instance.num_items();
  switch (algorithm.kind()) {
    case AlgorithmId::Kind::kExact:
      return Rational(1);
    case AlgorithmId::Kind::kTwoPhase:
      return Rational(2) * CertifiedAlpha(algorithm.inner());
    case AlgorithmId::Kind::kHeuristic:
      switch (algorithm.heuristic()) {
        case Heuristic::kNf:
        case Heuristic::kNfd:
          if (IsNfFamily(instance)) return Rational(n, 2);
          break;
        default:
          if (IsFfBfFamily(instance)) return Rational(n / 3 + 2, 3);
          break;
      }
      break;
  }
  return std::nullopt;
}

RatioReport MakeReport(std::string instance_id, const AlgorithmId& algorithm,
                       const Instance& instance, const SolveResult& result,
                       Cost reference, std::string ref_source) {
  RatioReport report;
  report.instance_id = std::move(instance_id);
  report.algorithm = algorithm.name();
  report.bins = result.solution.num_bins();
  report.cost = result.cost;
  report.reference = reference;
  report.ref_source = std::move(ref_source);
  report.ratio = Rational(result.cost, reference);
  report.bound = TheoreticalBound(algorithm, instance);
  return report;
}

std::string FormatCsvRow(const RatioReport& r) {
  std::string row = r.instance_id + "," + r.algorithm + "," +
                    std::to_string(r.bins) + "," + std::to_string(r.cost) +
                    "," + std::to_string(r.reference) + "," + r.ref_source +
                    "," + r.ratio.ToFixed(6) + ",";
  if (r.bound) row += r.bound->ToFixed(6);
  row += ",";
  if (r.wall_ms) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", *r.wall_ms);
    row += buf;
  }
  return row;
}

}  // namespace bpps
