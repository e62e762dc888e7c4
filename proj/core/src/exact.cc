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

#include "bpps/exact.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bpps/bounds.h"
#include "bpps/errors.h"
#include "bpps/heuristics.h"
#include "bpps/two_phase.h"

namespace bpps {

namespace {

Weight CeilDiv(Weight a, Weight b) { return (a + b - 1) / b; }

class BranchAndBound {
 public:
  BranchAndBound(const Instance& instance, std::int64_t node_limit)
      : inst_(instance),
        n_(instance.num_items()),
        m_(instance.num_classes()),
        node_limit_(node_limit),
        order_(InstanceOrder(instance)),
        assignment_(n_ + 1, -1),
        remaining_in_class_(m_ + 1, 0),
        active_count_(m_ + 1, 0),
        class_lb_(m_ + 1, 0),
        counts_(static_cast<std::size_t>(n_) * (m_ + 1), 0) {
    std::stable_sort(order_.begin(), order_.end(), [&](ItemId a, ItemId b) {
      return Footprint(a) > Footprint(b);
    });
    for (ItemId i = 1; i <= n_; ++i) {
      ++remaining_in_class_[inst_.class_of(i)];
      remaining_weight_ += inst_.weight(i);
    }
    for (ClassId c = 1; c <= m_; ++c) {
      class_lb_[c] = ClassLowerBound(inst_, c);
    }
    loads_.reserve(n_);
  }

  void SeedIncumbent(const Solution& solution) {
    const Cost cost = SolutionCost(inst_, solution);
    if (best_cost_ < 0 || cost < best_cost_) {
      best_cost_ = cost;
      best_ = solution;
    }
  }

  void Run() { Dfs(0, 0); }

  Cost best_cost() const { return best_cost_; }
  const Solution& best() const { return best_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  Weight Footprint(ItemId i) const {
    return inst_.weight(i) + inst_.setup_weight(inst_.class_of(i));
  }

  int& Count(int bin, ClassId c) {
    return counts_[static_cast<std::size_t>(bin) * (m_ + 1) + c];
  }
  int Count(int bin, ClassId c) const {
    return counts_[static_cast<std::size_t>(bin) * (m_ + 1) + c];
  }

  bool SameShape(int a, int b) const {
    if (loads_[a] != loads_[b]) return false;
    for (ClassId c = 1; c <= m_; ++c) {
      if ((Count(a, c) > 0) != (Count(b, c) > 0)) return false;
    }
    return true;
  }

  Cost CompletionBound(Cost cost) const {
    Weight load = remaining_weight_;
    for (Weight l : loads_) load += l;
    for (ClassId c = 1; c <= m_; ++c) {
      if (active_count_[c] == 0 && remaining_in_class_[c] > 0) {
        load += inst_.setup_weight(c) * class_lb_[c];
        cost += inst_.setup_cost(c) * class_lb_[c];
      }
    }
    const Weight open = static_cast<Weight>(loads_.size());
    const Weight bins = std::max(open, CeilDiv(load, inst_.capacity()));
    return cost + inst_.bin_cost() * (bins - open);
  }

  void Place(ItemId item, int bin, Cost* cost) {
    const ClassId c = inst_.class_of(item);
    Weight add = inst_.weight(item);
    if (Count(bin, c)++ == 0) {
      add += inst_.setup_weight(c);
      *cost += inst_.setup_cost(c);
      ++active_count_[c];
    }
    loads_[bin] += add;
    assignment_[item] = bin;
    --remaining_in_class_[c];
    remaining_weight_ -= inst_.weight(item);
  }

  void Unplace(ItemId item, int bin) {
    const ClassId c = inst_.class_of(item);
    Weight sub = inst_.weight(item);
    if (--Count(bin, c) == 0) {
      sub += inst_.setup_weight(c);
      --active_count_[c];
    }
    loads_[bin] -= sub;
    assignment_[item] = -1;
    ++remaining_in_class_[c];
    remaining_weight_ += inst_.weight(item);
  }

  void Record(Cost cost) {
    std::vector<std::vector<ItemId>> bins(loads_.size());
    for (ItemId i = 1; i <= n_; ++i) bins[assignment_[i]].push_back(i);
    best_.bins.clear();
    for (auto& b : bins) best_.bins.emplace_back(std::move(b));
    best_cost_ = cost;
  }

  void Dfs(int depth, Cost cost) {
    if (++nodes_ > node_limit_) {
      throw ResourceLimitError(
          "exact search exceeded node limit " + std::to_string(node_limit_),
          best_cost_ >= 0 ? std::optional<Solution>(Canonical(best_))
                          : std::nullopt);
    }
    if (best_cost_ >= 0 && CompletionBound(cost) >= best_cost_) return;
    if (depth == n_) {
      Record(cost);
      return;
    }

    const ItemId item = order_[depth];
    const ClassId c = inst_.class_of(item);
    const int open = static_cast<int>(loads_.size());

    // Fullest-after-insertion first, so good incumbents show up early.
    std::vector<std::pair<Weight, int>> candidates;
    for (int b = 0; b < open; ++b) {
      const Weight after = loads_[b] + inst_.weight(item) +
                           (Count(b, c) > 0 ? 0 : inst_.setup_weight(c));
      if (after <= inst_.capacity()) candidates.emplace_back(-after, b);
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<int> tried;
    for (const auto& [neg_after, b] : candidates) {
      if (std::any_of(tried.begin(), tried.end(),
                      [&](int t) { return SameShape(t, b); })) {
        continue;
      }
      tried.push_back(b);
      Cost next = cost;
      Place(item, b, &next);
      Dfs(depth + 1, next);
      Unplace(item, b);
    }

    loads_.push_back(0);
    Cost next = cost + inst_.bin_cost();
    Place(item, open, &next);
    Dfs(depth + 1, next);
    Unplace(item, open);
    loads_.pop_back();
  }

  const Instance& inst_;
  const int n_;
  const int m_;
  const std::int64_t node_limit_;
  ItemOrder order_;
  std::vector<int> assignment_;
  std::vector<int> remaining_in_class_;
  std::vector<int> active_count_;
  std::vector<int> class_lb_;
  std::vector<int> counts_;  // per open bin, per class item count
  std::vector<Weight> loads_;
  Weight remaining_weight_ = 0;
  std::int64_t nodes_ = 0;
  Cost best_cost_ = -1;
  Solution best_;
};

}  // namespace

OptResult ExactBpps(const Instance& instance, const ExactOptions& options) {
  if (instance.num_items() > options.max_items) {
    throw ResourceLimitError("instance has " +
                             std::to_string(instance.num_items()) +
                             " items; exact oracle limit is " +
                             std::to_string(options.max_items));
  }
  BranchAndBound search(instance, options.node_limit);
  for (Heuristic h : {Heuristic::kFfd, Heuristic::kBfd, Heuristic::kFf}) {
    search.SeedIncumbent(RunHeuristic(h, instance));
  }
  search.SeedIncumbent(TwoPhase(instance, InnerAlgorithm::kFfd).solution);
  search.Run();

  OptResult result;
  result.solution = Canonical(search.best());
  result.value = search.best_cost();
  result.nodes = search.nodes();
  if (options.class_optima) {
    for (ClassId c = 1; c <= instance.num_classes(); ++c) {
      const ClassSubInstance sub = MakeClassSubInstance(instance, c);
      result.class_optima.push_back(
          ExactBpp(sub.weights, sub.capacity,
                   {.max_items = std::max(options.max_items,
                                          kDefaultExactBppItemLimit),
                    .node_limit = options.node_limit})
              .num_bins);
    }
  }
  return result;
}

BppOptimum ExactBpp(std::span<const Weight> weights, Weight capacity,
                    const ExactOptions& options) {
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] > capacity) {
      throw InfeasibleItemError("item " + std::to_string(i + 1) + ": weight " +
                                std::to_string(weights[i]) + " > capacity " +
                                std::to_string(capacity));
    }
  }
  BppOptimum result;
  if (weights.empty()) return result;

  // A single class without setups is exactly a plain packing with r = 1.
  std::vector<Item> items;
  for (Weight w : weights) items.push_back({w, 1});
  const Instance single(capacity, 1, {{0, 0}}, std::move(items));
  const OptResult opt =
      ExactBpps(single, {.max_items = options.max_items,
                         .node_limit = options.node_limit});
  result.num_bins = opt.solution.num_bins();
  result.nodes = opt.nodes;
  for (const Bin& b : opt.solution.bins) {
    result.bins.emplace_back(b.items().begin(), b.items().end());
  }
  return result;
}

}  // namespace bpps
