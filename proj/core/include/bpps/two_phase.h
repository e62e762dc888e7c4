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

// Two-phase heuristic: pack every class on its own with a plain bin packing
// algorithm at capacity d - s_c, then merge pairs of bins while their union
// still fits. With an alpha-approximate inner algorithm the result costs at
// most 2 * alpha times the optimum (instances that fit one bin excluded).
//
// Merge rule: bins are kept sorted by non-increasing load (ties by smallest
// item id); the first pair (i, j), i < j, in lexicographic order whose union
// fits is merged, and the scan restarts.

#ifndef BPPS_TWO_PHASE_H_
#define BPPS_TWO_PHASE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bpps/exact.h"
#include "bpps/model.h"
#include "bpps/rational.h"

namespace bpps {

enum class InnerAlgorithm { kNf, kFf, kBf, kNfd, kFfd, kBfd, kExact };

std::string_view InnerAlgorithmName(InnerAlgorithm inner);
std::optional<InnerAlgorithm> ParseInnerAlgorithm(std::string_view name);

// Absolute worst-case ratio of the inner algorithm on plain bin packing:
// 1 for exact, 3/2 for FFD and BFD, 17/10 for FF and BF, 2 for NF and NFD.
Rational CertifiedAlpha(InnerAlgorithm inner);

// One Phase-2 step. Bins are named by their smallest item id, which is
// unique within a partition; the merged bin takes the smaller of the two.
struct MergeEvent {
  ItemId first = 0;
  ItemId second = 0;
  Weight merged_load = 0;

  bool operator==(const MergeEvent&) const = default;
};

struct PhaseTrace {
  std::vector<Bin> phase1_bins;
  std::vector<MergeEvent> merges;
  std::vector<Bin> final_bins;
};

struct TwoPhaseOptions {
  // Largest class the exact inner solver accepts.
  int exact_class_limit = kDefaultExactBppItemLimit;
  std::int64_t node_limit = kDefaultNodeLimit;
};

// Per-class packing. Returns a trace with only phase1_bins set, grouped by
// class in increasing class order. Throws ResourceLimitError when the exact
// inner solver is asked to handle a class above `exact_class_limit`.
PhaseTrace Phase1(const Instance& instance, InnerAlgorithm inner,
                  const TwoPhaseOptions& options = {});

// Greedy pairwise merging until no two bins fit together. Appends one event
// per merge to `log` when given.
std::vector<Bin> MergePhase(const Instance& instance, std::vector<Bin> bins,
                            std::vector<MergeEvent>* log = nullptr);

// Applies logged merges to `bins`. Throws InvalidArgumentError if an event
// names a missing bin or records the wrong load.
std::vector<Bin> ReplayMerges(const Instance& instance, std::vector<Bin> bins,
                              std::span<const MergeEvent> merges);

struct TwoPhaseResult {
  Solution solution;
  PhaseTrace trace;
  Rational alpha;
};

TwoPhaseResult TwoPhase(const Instance& instance, InnerAlgorithm inner,
                        const TwoPhaseOptions& options = {});

}  // namespace bpps

#endif  // BPPS_TWO_PHASE_H_
