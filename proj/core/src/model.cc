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

#include "bpps/model.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bpps/errors.h"

namespace bpps {

namespace {

std::string Str(std::int64_t v) { return std::to_string(v); }

void CheckItemSet(const Instance& instance, std::span<const ItemId> items) {
  if (items.empty()) throw InvalidArgumentError("item set is empty");
  for (ItemId i : items) {
    if (i < 1 || i > instance.num_items()) {
      throw InvalidArgumentError("item id " + Str(i) + " out of range 1.." +
                                 Str(instance.num_items()));
    }
  }
}

}  // namespace

Instance::Instance(Weight capacity, Cost bin_cost,
                   std::vector<ItemClass> classes, std::vector<Item> items)
    : capacity_(capacity),
      bin_cost_(bin_cost),
      classes_(std::move(classes)),
      items_(std::move(items)) {}

Bin::Bin(std::vector<ItemId> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
}

Solution Canonical(Solution solution) {
  std::sort(solution.bins.begin(), solution.bins.end(),
            [](const Bin& a, const Bin& b) { return a.front() < b.front(); });
  return solution;
}

std::vector<ClassId> ActiveClasses(const Instance& instance,
                                   std::span<const ItemId> items) {
  std::vector<ClassId> classes;
  classes.reserve(items.size());
  for (ItemId i : items) classes.push_back(instance.class_of(i));
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

Weight Load(const Instance& instance, std::span<const ItemId> items) {
  CheckItemSet(instance, items);
  Weight load = 0;
  for (ItemId i : items) load += instance.weight(i);
  for (ClassId c : ActiveClasses(instance, items)) {
    load += instance.setup_weight(c);
  }
  return load;
}

Cost SetCost(const Instance& instance, std::span<const ItemId> items) {
  CheckItemSet(instance, items);
  Cost cost = instance.bin_cost();
  for (ClassId c : ActiveClasses(instance, items)) {
    cost += instance.setup_cost(c);
  }
  return cost;
}

Validation ValidateInstance(const Instance& instance) {
  Validation v;
  const Weight d = instance.capacity();
  const int m = instance.num_classes();
  if (instance.num_items() < 1) v.violations.push_back({"n must be >= 1"});
  if (m < 1) v.violations.push_back({"m must be >= 1"});
  if (d < 1) v.violations.push_back({"d = " + Str(d) + " must be >= 1"});
  if (instance.bin_cost() < 1) {
    v.violations.push_back({"r = " + Str(instance.bin_cost()) + " must be >= 1"});
  }
  for (ClassId c = 1; c <= m; ++c) {
    if (instance.setup_weight(c) < 0) {
      v.violations.push_back({"class " + Str(c) + ": setup weight " +
                                  Str(instance.setup_weight(c)) +
                                  " must be >= 0",
                              0, c});
    }
    if (instance.setup_cost(c) < 0) {
      v.violations.push_back({"class " + Str(c) + ": setup cost " +
                                  Str(instance.setup_cost(c)) + " must be >= 0",
                              0, c});
    }
  }

  std::vector<int> class_size(m + 1, 0);
  bool classes_in_range = true;
  for (ItemId i = 1; i <= instance.num_items(); ++i) {
    const Weight w = instance.weight(i);
    const ClassId c = instance.class_of(i);
    if (w < 1) {
      v.violations.push_back(
          {"item " + Str(i) + ": weight " + Str(w) + " must be >= 1", i});
    }
    if (c < 1 || c > m) {
      v.violations.push_back({"item " + Str(i) + ": class " + Str(c) +
                                  " out of range 1.." + Str(m),
                              i});
      classes_in_range = false;
      continue;
    }
    ++class_size[c];
    const Weight need = w + instance.setup_weight(c);
    if (need > d) {
      v.violations.push_back(
          {"item " + Str(i) + ": w+s = " + Str(need) + " > d = " + Str(d), i});
    }
  }
  for (ClassId c = 1; c <= m; ++c) {
    if (class_size[c] == 0) {
      v.violations.push_back({"class " + Str(c) + " has no items", 0, c});
    }
  }

  if (v.ok() && classes_in_range) {
    std::vector<ItemId> all(instance.num_items());
    for (ItemId i = 1; i <= instance.num_items(); ++i) all[i - 1] = i;
    if (Load(instance, all) <= d) {
      v.notes.push_back("all items fit into a single bin");
    }
  }
  return v;
}

Validation ValidateSolution(const Instance& instance,
                            const Solution& solution) {
  Validation v;
  const int n = instance.num_items();
  std::vector<int> seen(n + 1, 0);
  for (int b = 0; b < solution.num_bins(); ++b) {
    const Bin& bin = solution.bins[b];
    const std::string name = "bin " + Str(b + 1);
    if (bin.empty()) {
      v.violations.push_back({name + " is empty"});
      continue;
    }
    bool in_range = true;
    for (ItemId i : bin.items()) {
      if (i < 1 || i > n) {
        v.violations.push_back(
            {name + ": item id " + Str(i) + " out of range 1.." + Str(n)});
        in_range = false;
      } else {
        ++seen[i];
      }
    }
    if (!in_range) continue;
    const Weight load = Load(instance, bin.items());
    if (load > instance.capacity()) {
      v.violations.push_back(
          {name + ": load " + Str(load) + " > d = " + Str(instance.capacity())});
    }
  }
  for (ItemId i = 1; i <= n; ++i) {
    if (seen[i] == 0) {
      v.violations.push_back({"item " + Str(i) + " unassigned", i});
    } else if (seen[i] > 1) {
      v.violations.push_back(
          {"item " + Str(i) + " assigned " + Str(seen[i]) + " times", i});
    }
  }
  return v;
}

Cost SolutionCost(const Instance& instance, const Solution& solution) {
  const Validation v = ValidateSolution(instance, solution);
  if (!v.ok()) {
    throw InvalidArgumentError("invalid solution: " +
                               v.violations.front().message);
  }
  Cost total = 0;
  for (const Bin& bin : solution.bins) total += SetCost(instance, bin.items());
  return total;
}

ClassSubInstance MakeClassSubInstance(const Instance& instance, ClassId c) {
  if (c < 1 || c > instance.num_classes()) {
    throw InvalidArgumentError("class id " + Str(c) + " out of range");
  }
  ClassSubInstance sub;
  sub.class_id = c;
  sub.capacity = instance.capacity() - instance.setup_weight(c);
  for (ItemId i = 1; i <= instance.num_items(); ++i) {
    if (instance.class_of(i) == c) {
      sub.item_ids.push_back(i);
      sub.weights.push_back(instance.weight(i));
    }
  }
  return sub;
}

}  // namespace bpps
