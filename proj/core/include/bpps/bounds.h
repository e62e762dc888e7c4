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

// Combinatorial lower bounds on the optimal cost.
//
// In any feasible solution, the bins holding items of class c form a plain
// packing of that class at capacity d - s_c, so class c is active in at
// least B_c bins, where B_c is the optimum of that per-class packing. Each
// such activation adds s_c to the total load and f_c to the cost, and the
// total load is at most d times the number of bins. Hence
//
//   cost >= r * ceil((W + sum_c s_c B_c) / d) + sum_c f_c B_c
//
// for any lower bound B_c on the per-class optimum. The weak bound uses
// ceil(W_c / (d - s_c)); the strong bound solves each class exactly.

#ifndef BPPS_BOUNDS_H_
#define BPPS_BOUNDS_H_

#include <string_view>
#include <vector>

#include "bpps/model.h"

namespace bpps {

enum class BoundStrength { kWeak, kStrong };

std::string_view BoundStrengthName(BoundStrength strength);

// ceil(sum of class-c weights / (d - s_c)).
int ClassLowerBound(const Instance& instance, ClassId c);

struct LowerBoundReport {
  BoundStrength strength = BoundStrength::kWeak;
  std::vector<int> class_bins;  // index c-1
  Weight total_weight = 0;
  int bin_count = 0;
  Cost cost = 0;
};

// The strong mode runs the exact per-class solver and may throw
// ResourceLimitError on large classes.
LowerBoundReport ComputeLowerBound(const Instance& instance,
                                   BoundStrength strength = BoundStrength::kWeak);

inline Cost CombinatorialLowerBound(
    const Instance& instance, BoundStrength strength = BoundStrength::kWeak) {
  return ComputeLowerBound(instance, strength).cost;
}

}  // namespace bpps

#endif  // BPPS_BOUNDS_H_
