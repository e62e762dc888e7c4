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

// Bin packing with setups: instances, bins, solutions and the load/cost
// semantics shared by every solver.
//
// Items and classes are 1-based throughout. A bin that hosts at least one
// item of class c pays that class's setup weight s_c (capacity) and setup
// cost f_c (objective) exactly once, on top of the bin cost r.

#ifndef BPPS_MODEL_H_
#define BPPS_MODEL_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bpps {

using ItemId = int;
using ClassId = int;
// Capacity units (weights, setup weights, loads).
using Weight = std::int64_t;
// Objective units (bin cost, setup costs, solution cost).
using Cost = std::int64_t;

struct Item {
  Weight weight = 0;
  ClassId item_class = 0;

  bool operator==(const Item&) const = default;
};

struct ItemClass {
  Weight setup_weight = 0;
  Cost setup_cost = 0;

  bool operator==(const ItemClass&) const = default;
};

// An immutable problem instance. Construction performs no validation so
// that malformed instances can be inspected with ValidateInstance(); every
// solver assumes a valid instance.
class Instance {
 public:
  Instance() = default;
  Instance(Weight capacity, Cost bin_cost, std::vector<ItemClass> classes,
           std::vector<Item> items);

  int num_items() const { return static_cast<int>(items_.size()); }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  Weight capacity() const { return capacity_; }
  Cost bin_cost() const { return bin_cost_; }

  const Item& item(ItemId i) const { return items_[i - 1]; }
  Weight weight(ItemId i) const { return items_[i - 1].weight; }
  ClassId class_of(ItemId i) const { return items_[i - 1].item_class; }
  const ItemClass& item_class(ClassId c) const { return classes_[c - 1]; }
  Weight setup_weight(ClassId c) const { return classes_[c - 1].setup_weight; }
  Cost setup_cost(ClassId c) const { return classes_[c - 1].setup_cost; }

  const std::vector<Item>& items() const { return items_; }
  const std::vector<ItemClass>& classes() const { return classes_; }

  bool operator==(const Instance&) const = default;

 private:
  Weight capacity_ = 0;
  Cost bin_cost_ = 0;
  std::vector<ItemClass> classes_;
  std::vector<Item> items_;
};

// A set of item ids, kept sorted ascending.
class Bin {
 public:
  Bin() = default;
  explicit Bin(std::vector<ItemId> items);

  std::span<const ItemId> items() const { return items_; }
  int size() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }
  ItemId front() const { return items_.front(); }

  bool operator==(const Bin&) const = default;
  auto operator<=>(const Bin&) const = default;

 private:
  std::vector<ItemId> items_;
};

struct Solution {
  std::vector<Bin> bins;

  int num_bins() const { return static_cast<int>(bins.size()); }
  bool operator==(const Solution&) const = default;
};

// Returns a copy with bins ordered by smallest item id.
Solution Canonical(Solution solution);

// Distinct classes present in `items`, ascending.
std::vector<ClassId> ActiveClasses(const Instance& instance,
                                   std::span<const ItemId> items);

// Sum of item weights plus one setup weight per active class. Throws
// InvalidArgumentError on an empty set or an out-of-range id.
Weight Load(const Instance& instance, std::span<const ItemId> items);

// Bin cost plus one setup cost per active class. Same errors as Load().
Cost SetCost(const Instance& instance, std::span<const ItemId> items);

// A broken rule. `item` / `class_id` locate it when it concerns a single
// item or class (0 otherwise).
struct Violation {
  std::string message;
  ItemId item = 0;
  ClassId class_id = 0;
};

// Outcome of a validation pass. Violations make the object not ok; notes are
// informational only.
struct Validation {
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
};

// Checks the domain rules (positive d, r and weights, non-negative setups,
// class labels in range, no empty class, w_i + s_{c_i} <= d). Adds a note
// when every item fits into a single bin.
Validation ValidateInstance(const Instance& instance);

// Checks that `solution` partitions the items and that every bin fits.
Validation ValidateSolution(const Instance& instance,
                            const Solution& solution);

// Sum of SetCost() over bins. Throws InvalidArgumentError if the solution
// does not validate.
Cost SolutionCost(const Instance& instance, const Solution& solution);

// The plain bin packing instance formed by the items of one class, packed
// at the reduced capacity d - s_c.
struct ClassSubInstance {
  ClassId class_id = 0;
  std::vector<ItemId> item_ids;  // instance order
  std::vector<Weight> weights;   // parallel to item_ids
  Weight capacity = 0;
};

ClassSubInstance MakeClassSubInstance(const Instance& instance, ClassId c);

}  // namespace bpps

#endif  // BPPS_MODEL_H_
