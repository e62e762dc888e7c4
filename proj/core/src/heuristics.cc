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

#include "bpps/heuristics.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bpps/errors.h"

namespace bpps {

namespace {

constexpr std::array<std::pair<Heuristic, std::string_view>, 6> kNames = {{
    {Heuristic::kNf, "nf"},
    {Heuristic::kFf, "ff"},
    {Heuristic::kBf, "bf"},
    {Heuristic::kNfd, "nfd"},
    {Heuristic::kFfd, "ffd"},
    {Heuristic::kBfd, "bfd"},
}};

void CheckPermutation(std::span<const int> order, int n) {
  if (static_cast<int>(order.size()) != n) {
    throw InvalidArgumentError("order has " + std::to_string(order.size()) +
                               " entries, expected " + std::to_string(n));
  }
  std::vector<bool> seen(n + 1, false);
  for (int i : order) {
    if (i < 1 || i > n || seen[i]) {
      throw InvalidArgumentError("order is not a permutation of 1.." +
                                 std::to_string(n));
    }
    seen[i] = true;
  }
}

// A bin under construction with its load and active classes cached.
struct OpenBin {
  std::vector<ItemId> items;
  std::vector<ClassId> active;  // sorted
  Weight load = 0;

  bool IsActive(ClassId c) const {
    return std::binary_search(active.begin(), active.end(), c);
  }

  Weight Required(const Instance& instance, ItemId i) const {
    const ClassId c = instance.class_of(i);
    return instance.weight(i) + (IsActive(c) ? 0 : instance.setup_weight(c));
  }

  void Add(const Instance& instance, ItemId i) {
    load += Required(instance, i);
    const ClassId c = instance.class_of(i);
    auto it = std::lower_bound(active.begin(), active.end(), c);
    if (it == active.end() || *it != c) active.insert(it, c);
    items.push_back(i);
  }
};

// Index of the bin chosen by `rule`, or -1 when a new bin must be opened.
// `fits(b)` and `level(b)` give feasibility and post-insertion load.
template <typename Fits, typename Level>
int ChooseBin(PackingRule rule, int num_bins, Fits fits, Level level) {
  switch (rule) {
    case PackingRule::kNextFit:
      return num_bins > 0 && fits(num_bins - 1) ? num_bins - 1 : -1;
    case PackingRule::kFirstFit:
      for (int b = 0; b < num_bins; ++b) {
        if (fits(b)) return b;
      }
      return -1;
    case PackingRule::kBestFit: {
      // Minimum residual after insertion; strict comparison keeps the lowest
      // index on ties.
      int best = -1;
      Weight best_level = 0;
      for (int b = 0; b < num_bins; ++b) {
        if (!fits(b)) continue;
        const Weight l = level(b);
        if (best < 0 || l > best_level) {
          best = b;
          best_level = l;
        }
      }
      return best;
    }
  }
  return -1;
}

}  // namespace

std::string_view HeuristicName(Heuristic h) {
  for (const auto& [id, name] : kNames) {
    if (id == h) return name;
  }
  return "?";
}

std::optional<Heuristic> ParseHeuristic(std::string_view name) {
  for (const auto& [id, n] : kNames) {
    if (n == name) return id;
  }
  return std::nullopt;
}

PackingRule RuleOf(Heuristic h) {
  switch (h) {
    case Heuristic::kNf:
    case Heuristic::kNfd:
      return PackingRule::kNextFit;
    case Heuristic::kFf:
    case Heuristic::kFfd:
      return PackingRule::kFirstFit;
    case Heuristic::kBf:
    case Heuristic::kBfd:
      return PackingRule::kBestFit;
  }
  return PackingRule::kFirstFit;
}

bool IsDecreasing(Heuristic h) {
  return h == Heuristic::kNfd || h == Heuristic::kFfd || h == Heuristic::kBfd;
}

ItemOrder InstanceOrder(const Instance& instance) {
  ItemOrder order(instance.num_items());
  std::iota(order.begin(), order.end(), 1);
  return order;
}

ItemOrder DecreasingOrder(const Instance& instance) {
  ItemOrder order = InstanceOrder(instance);
  std::stable_sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
    return instance.weight(a) > instance.weight(b);
  });
  return order;
}

Weight RequiredCapacity(const Instance& instance,
                        std::span<const ItemId> bin_items, ItemId item) {
  const ClassId c = instance.class_of(item);
  const bool active =
      std::any_of(bin_items.begin(), bin_items.end(),
                  [&](ItemId j) { return instance.class_of(j) == c; });
  return instance.weight(item) + (active ? 0 : instance.setup_weight(c));
}

Solution PackBpps(const Instance& instance, PackingRule rule,
                  std::span<const ItemId> order) {
  CheckPermutation(order, instance.num_items());
  const Weight d = instance.capacity();
  std::vector<OpenBin> bins;
  for (ItemId i : order) {
    const int chosen = ChooseBin(
        rule, static_cast<int>(bins.size()),
        [&](int b) { return bins[b].load + bins[b].Required(instance, i) <= d; },
        [&](int b) { return bins[b].load + bins[b].Required(instance, i); });
    if (chosen < 0) {
      // NF never looks back, so abandoning the previous bin is implicit.
      bins.emplace_back();
      bins.back().Add(instance, i);
    } else {
      bins[chosen].Add(instance, i);
    }
  }
  Solution solution;
  solution.bins.reserve(bins.size());
  for (OpenBin& b : bins) solution.bins.emplace_back(std::move(b.items));
  return solution;
}

Solution RunHeuristic(Heuristic h, const Instance& instance) {
  const ItemOrder order =
      IsDecreasing(h) ? DecreasingOrder(instance) : InstanceOrder(instance);
  return PackBpps(instance, RuleOf(h), order);
}

Solution RunHeuristic(std::string_view name, const Instance& instance) {
  const auto h = ParseHeuristic(name);
  if (!h) {
    throw InvalidArgumentError("unknown heuristic '" + std::string(name) + "'");
  }
  return RunHeuristic(*h, instance);
}

std::vector<std::vector<int>> BppPack(std::span<const Weight> weights,
                                      Weight capacity, PackingRule rule,
                                      std::span<const int> order) {
  const int k = static_cast<int>(weights.size());
  CheckPermutation(order, k);
  for (int i = 0; i < k; ++i) {
    if (weights[i] > capacity) {
      throw InfeasibleItemError("item " + std::to_string(i + 1) + ": weight " +
                                std::to_string(weights[i]) + " > capacity " +
                                std::to_string(capacity));
    }
  }
  std::vector<std::vector<int>> bins;
  std::vector<Weight> loads;
  for (int i : order) {
    const Weight w = weights[i - 1];
    const int chosen = ChooseBin(
        rule, static_cast<int>(bins.size()),
        [&](int b) { return loads[b] + w <= capacity; },
        [&](int b) { return loads[b] + w; });
    if (chosen < 0) {
      bins.push_back({i});
      loads.push_back(w);
    } else {
      bins[chosen].push_back(i);
      loads[chosen] += w;
    }
  }
  return bins;
}

std::vector<int> DecreasingOrder(std::span<const Weight> weights) {
  std::vector<int> order(weights.size());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return weights[a - 1] > weights[b - 1];
  });
  return order;
}

}  // namespace bpps
