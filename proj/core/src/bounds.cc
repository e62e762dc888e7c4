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

#include "bpps/bounds.h"

#include "bpps/errors.h"
#include "bpps/exact.h"

namespace bpps {

namespace {

Weight CeilDiv(Weight a, Weight b) { return (a + b - 1) / b; }

}  // namespace

std::string_view BoundStrengthName(BoundStrength strength) {
  return strength == BoundStrength::kStrong ? "strong" : "weak";
}

int ClassLowerBound(const Instance& instance, ClassId c) {
  const ClassSubInstance sub = MakeClassSubInstance(instance, c);
  Weight total = 0;
  for (Weight w : sub.weights) total += w;
  return static_cast<int>(CeilDiv(total, sub.capacity));
}

LowerBoundReport ComputeLowerBound(const Instance& instance,
                                   BoundStrength strength) {
  LowerBoundReport report;
  report.strength = strength;
  for (const Item& item : instance.items()) report.total_weight += item.weight;

  Weight setup_mass = 0;
  Cost setup_costs = 0;
  for (ClassId c = 1; c <= instance.num_classes(); ++c) {
    int bins = 0;
    if (strength == BoundStrength::kStrong) {
      const ClassSubInstance sub = MakeClassSubInstance(instance, c);
      bins = ExactBpp(sub.weights, sub.capacity).num_bins;
    } else {
      bins = ClassLowerBound(instance, c);
    }
    report.class_bins.push_back(bins);
    setup_mass += instance.setup_weight(c) * bins;
    setup_costs += instance.setup_cost(c) * bins;
  }
  report.bin_count = static_cast<int>(
      CeilDiv(report.total_weight + setup_mass, instance.capacity()));
  report.cost = instance.bin_cost() * report.bin_count + setup_costs;
  return report;
}

}  // namespace bpps
