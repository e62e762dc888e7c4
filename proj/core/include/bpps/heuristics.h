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

// Next Fit, First Fit and Best Fit with their decreasing-order variants.
//
// The setup-aware versions charge s_c when an item is the first of its class
// in a bin, so an item fits iff load + RequiredCapacity() <= d. The plain
// versions (BppPack) are what the two-phase heuristic runs per class.

#ifndef BPPS_HEURISTICS_H_
#define BPPS_HEURISTICS_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bpps/model.h"

namespace bpps {

enum class PackingRule { kNextFit, kFirstFit, kBestFit };

enum class Heuristic { kNf, kFf, kBf, kNfd, kFfd, kBfd };

std::string_view HeuristicName(Heuristic h);
std::optional<Heuristic> ParseHeuristic(std::string_view name);
PackingRule RuleOf(Heuristic h);
bool IsDecreasing(Heuristic h);

// A permutation of item ids 1..n.
using ItemOrder = std::vector<ItemId>;

// 1, 2, ..., n.
ItemOrder InstanceOrder(const Instance& instance);

// Items by non-increasing weight; equal weights keep instance order.
ItemOrder DecreasingOrder(const Instance& instance);

// Capacity consumed by adding `item` to the bin holding `bin_items`: w_i if
// the item's class is already active there, w_i + s_{c_i} otherwise.
Weight RequiredCapacity(const Instance& instance,
                        std::span<const ItemId> bin_items, ItemId item);

// Setup-aware packing of `order` under `rule`. Throws InvalidArgumentError if
// `order` is not a permutation of the items.
Solution PackBpps(const Instance& instance, PackingRule rule,
                  std::span<const ItemId> order);

inline Solution NextFitBpps(const Instance& instance,
                            std::span<const ItemId> order) {
  return PackBpps(instance, PackingRule::kNextFit, order);
}
inline Solution FirstFitBpps(const Instance& instance,
                             std::span<const ItemId> order) {
  return PackBpps(instance, PackingRule::kFirstFit, order);
}
inline Solution BestFitBpps(const Instance& instance,
                            std::span<const ItemId> order) {
  return PackBpps(instance, PackingRule::kBestFit, order);
}

// Runs `h` on the instance order, or on DecreasingOrder() for the *d
// variants.
Solution RunHeuristic(Heuristic h, const Instance& instance);
// Same, by name ("nf", "ffd", ...). Unknown names throw InvalidArgumentError.
Solution RunHeuristic(std::string_view name, const Instance& instance);

// Plain bin packing over local 1-based indices. Bins are returned in opening
// order, each listing its indices in insertion order. Throws
// InfeasibleItemError if a weight exceeds `capacity`.
std::vector<std::vector<int>> BppPack(std::span<const Weight> weights,
                                      Weight capacity, PackingRule rule,
                                      std::span<const int> order);

// 1..k sorted by non-increasing weight, stable.
std::vector<int> DecreasingOrder(std::span<const Weight> weights);

}  // namespace bpps

#endif  // BPPS_HEURISTICS_H_
