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

#ifndef BPPS_SOLVE_H_
#define BPPS_SOLVE_H_

#include <optional>
#include <string>
#include <string_view>

#include "bpps/exact.h"
#include "bpps/heuristics.h"
#include "bpps/model.h"
#include "bpps/rational.h"
#include "bpps/two_phase.h"

namespace bpps {

// Every solvable method by name: nf, ff, bf, nfd, ffd, bfd (setup-aware
// heuristics), tp-<inner> for each two-phase inner algorithm (tp-ffd,
// tp-bfd, tp-exact, ...), and exact.
class AlgorithmId {
 public:
  enum class Kind { kHeuristic, kTwoPhase, kExact };

  static std::optional<AlgorithmId> Parse(std::string_view name);
  // Throws InvalidArgumentError for unknown names.
  static AlgorithmId FromName(std::string_view name);

  static AlgorithmId Of(Heuristic h) { return AlgorithmId(Kind::kHeuristic, h, {}); }
  static AlgorithmId TwoPhaseWith(InnerAlgorithm inner) {
    return AlgorithmId(Kind::kTwoPhase, {}, inner);
  }
  static AlgorithmId Exact() { return AlgorithmId(Kind::kExact, {}, {}); }

  Kind kind() const { return kind_; }
  Heuristic heuristic() const { return heuristic_; }
  InnerAlgorithm inner() const { return inner_; }
  std::string name() const;

  bool operator==(const AlgorithmId&) const = default;

 private:
  AlgorithmId(Kind kind, Heuristic h, InnerAlgorithm inner)
      : kind_(kind), heuristic_(h), inner_(inner) {}

  Kind kind_;
  Heuristic heuristic_;
  InnerAlgorithm inner_;
};

struct SolveOptions {
  ExactOptions exact;
  TwoPhaseOptions two_phase;
};

struct SolveResult {
  Solution solution;
  Cost cost = 0;
  std::optional<PhaseTrace> trace;  // two-phase only
  std::optional<Rational> alpha;    // two-phase only
};

SolveResult Solve(const AlgorithmId& algorithm, const Instance& instance,
                  const SolveOptions& options = {});

}  // namespace bpps

#endif  // BPPS_SOLVE_H_
