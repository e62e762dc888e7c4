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

// Exact branch-and-bound for small instances.
//
// Items are assigned one at a time (largest w + s first) either to an open
// bin or to a new bin appended at the end, so every partition is reached
// through exactly one bin ordering. Open bins with the same load and the
// same active classes are interchangeable and only one of them is tried.
// A node is pruned when
//
//   cost so far + r * (extra bins forced by total load)
//               + sum over untouched classes c of f_c * ceil(W_c / (d - s_c))
//
// reaches the incumbent, where the load count also includes s_c times that
// per-class bound for every class with no item placed yet.

#ifndef BPPS_EXACT_H_
#define BPPS_EXACT_H_

#include <cstdint>
#include <span>
#include <vector>

#include "bpps/model.h"

namespace bpps {

inline constexpr int kDefaultExactItemLimit = 14;
inline constexpr int kDefaultExactBppItemLimit = 20;
inline constexpr std::int64_t kDefaultNodeLimit = 10'000'000;

struct ExactOptions {
  int max_items = kDefaultExactItemLimit;
  std::int64_t node_limit = kDefaultNodeLimit;
  // Also solve every class's plain packing exactly and report the counts.
  bool class_optima = false;
};

struct OptResult {
  Solution solution;  // canonical bin order
  Cost value = 0;
  std::int64_t nodes = 0;
  std::vector<int> class_optima;  // index c-1; filled on request
};

// Optimal solution. Throws ResourceLimitError when the instance has more
// than `max_items` items (no incumbent) or the search visits more than
// `node_limit` nodes (best incumbent attached).
OptResult ExactBpps(const Instance& instance, const ExactOptions& options = {});

struct BppOptimum {
  int num_bins = 0;
  std::vector<std::vector<int>> bins;  // local 1-based indices, ascending
  std::int64_t nodes = 0;
};

// Minimum number of bins for a plain packing. Throws InfeasibleItemError if
// a weight exceeds `capacity`; limits as for ExactBpps.
BppOptimum ExactBpp(std::span<const Weight> weights, Weight capacity,
                    const ExactOptions& options = {
                        .max_items = kDefaultExactBppItemLimit});

}  // namespace bpps

#endif  // BPPS_EXACT_H_
