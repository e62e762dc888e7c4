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

#include "bpps/solve.h"

#include <string>
#include <utility>

#include "bpps/errors.h"

namespace bpps {

std::optional<AlgorithmId> AlgorithmId::Parse(std::string_view name) {
  if (name == "exact") return Exact();
  if (const auto h = ParseHeuristic(name)) return Of(*h);
  constexpr std::string_view kPrefix = "tp-";
  if (name.substr(0, kPrefix.size()) == kPrefix) {
    if (const auto inner = ParseInnerAlgorithm(name.substr(kPrefix.size()))) {
      return TwoPhaseWith(*inner);
    }
  }
  return std::nullopt;
}

AlgorithmId AlgorithmId::FromName(std::string_view name) {
  if (const auto id = Parse(name)) return *id;
  throw InvalidArgumentError("unknown algorithm '" + std::string(name) + "'");
}

std::string AlgorithmId::name() const {
  switch (kind_) {
    case Kind::kHeuristic:
      return std::string(HeuristicName(heuristic_));
    case Kind::kTwoPhase:
      return "tp-" + std::string(InnerAlgorithmName(inner_));
    case Kind::kExact:
      return "exact";
  }
  return "?";
}

SolveResult Solve(const AlgorithmId& algorithm, const Instance& instance,
                  const SolveOptions& options) {
  SolveResult result;
  switch (algorithm.kind()) {
    case AlgorithmId::Kind::kHeuristic:
      result.solution = RunHeuristic(algorithm.heuristic(), instance);
      break;
    case AlgorithmId::Kind::kTwoPhase: {
      TwoPhaseResult tp =
          TwoPhase(instance, algorithm.inner(), options.two_phase);
      result.solution = std::move(tp.solution);
      result.trace = std::move(tp.trace);
      result.alpha = tp.alpha;
      break;
    }
    case AlgorithmId::Kind::kExact:
      result.solution = ExactBpps(instance, options.exact).solution;
      break;
  }
  result.cost = SolutionCost(instance, result.solution);
  return result;
}

}  // namespace bpps
