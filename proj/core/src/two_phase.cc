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

#include "bpps/two_phase.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bpps/errors.h"
#include "bpps/heuristics.h"

namespace bpps {

namespace {

constexpr std::array<std::pair<InnerAlgorithm, std::string_view>, 7> kNames = {{
    {InnerAlgorithm::kNf, "nf"},
    {InnerAlgorithm::kFf, "ff"},
    {InnerAlgorithm::kBf, "bf"},
    {InnerAlgorithm::kNfd, "nfd"},
    {InnerAlgorithm::kFfd, "ffd"},
    {InnerAlgorithm::kBfd, "bfd"},
    {InnerAlgorithm::kExact, "exact"},
}};

struct MergeBin {
  std::vector<ItemId> items;
  std::vector<ClassId> active;  // sorted
  Weight load = 0;
};

MergeBin MakeMergeBin(const Instance& instance, const Bin& bin) {
  MergeBin b;
  b.items.assign(bin.items().begin(), bin.items().end());
  b.active = ActiveClasses(instance, bin.items());
  b.load = Load(instance, bin.items());
  return b;
}

Weight UnionLoad(const Instance& instance, const MergeBin& a,
                 const MergeBin& b) {
  Weight load = a.load + b.load;
  auto ia = a.active.begin();
  auto ib = b.active.begin();
  while (ia != a.active.end() && ib != b.active.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      load -= instance.setup_weight(*ia);
      ++ia;
      ++ib;
    }
  }
  return load;
}

MergeBin Union(MergeBin a, const MergeBin& b, Weight load) {
  a.items.insert(a.items.end(), b.items.begin(), b.items.end());
  std::sort(a.items.begin(), a.items.end());
  std::vector<ClassId> active;
  std::set_union(a.active.begin(), a.active.end(), b.active.begin(),
                 b.active.end(), std::back_inserter(active));
  a.active = std::move(active);
  a.load = load;
  return a;
}

}  // namespace

std::string_view InnerAlgorithmName(InnerAlgorithm inner) {
  for (const auto& [id, name] : kNames) {
    if (id == inner) return name;
  }
  return "?";
}

std::optional<InnerAlgorithm> ParseInnerAlgorithm(std::string_view name) {
  for (const auto& [id, n] : kNames) {
    if (n == name) return id;
  }
  return std::nullopt;
}

Rational CertifiedAlpha(InnerAlgorithm inner) {
  switch (inner) {
    case InnerAlgorithm::kExact:
      return Rational(1);
    case InnerAlgorithm::kFfd:
    case InnerAlgorithm::kBfd:
      return Rational(3, 2);
    case InnerAlgorithm::kFf:
    case InnerAlgorithm::kBf:
      return Rational(17, 10);
    case InnerAlgorithm::kNf:
    case InnerAlgorithm::kNfd:
      return Rational(2);
  }
  return Rational(2);
}

PhaseTrace Phase1(const Instance& instance, InnerAlgorithm inner,
                  const TwoPhaseOptions& options) {
  PhaseTrace trace;
  for (ClassId c = 1; c <= instance.num_classes(); ++c) {
    const ClassSubInstance sub = MakeClassSubInstance(instance, c);
    std::vector<std::vector<int>> local;
    if (inner == InnerAlgorithm::kExact) {
      if (static_cast<int>(sub.weights.size()) > options.exact_class_limit) {
        throw ResourceLimitError(
            "class " + std::to_string(c) + " has " +
            std::to_string(sub.weights.size()) +
            " items; exact inner solver limit is " +
            std::to_string(options.exact_class_limit));
      }
      local = ExactBpp(sub.weights, sub.capacity,
                       {.max_items = options.exact_class_limit,
                        .node_limit = options.node_limit})
                  .bins;
    } else {
      const Heuristic h = *ParseHeuristic(InnerAlgorithmName(inner));
      std::vector<int> order(sub.weights.size());
      std::iota(order.begin(), order.end(), 1);
      if (IsDecreasing(h)) order = DecreasingOrder(sub.weights);
      local = BppPack(sub.weights, sub.capacity, RuleOf(h), order);
    }
    for (const auto& bin : local) {
      std::vector<ItemId> ids;
      for (int k : bin) ids.push_back(sub.item_ids[k - 1]);
      trace.phase1_bins.emplace_back(std::move(ids));
    }
  }
  return trace;
}

std::vector<Bin> MergePhase(const Instance& instance, std::vector<Bin> bins,
                            std::vector<MergeEvent>* log) {
  std::vector<MergeBin> work;
  work.reserve(bins.size());
  for (const Bin& b : bins) work.push_back(MakeMergeBin(instance, b));

  const Weight d = instance.capacity();
  while (true) {
    std::stable_sort(work.begin(), work.end(),
                     [](const MergeBin& a, const MergeBin& b) {
                       if (a.load != b.load) return a.load > b.load;
                       return a.items.front() < b.items.front();
                     });
    bool merged = false;
    for (std::size_t i = 0; i < work.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < work.size(); ++j) {
        const Weight load = UnionLoad(instance, work[i], work[j]);
        if (load > d) continue;
        if (log != nullptr) {
          log->push_back(
              {work[i].items.front(), work[j].items.front(), load});
        }
        work[i] = Union(std::move(work[i]), work[j], load);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
        merged = true;
        break;
      }
    }
    if (!merged) break;
  }

  std::vector<Bin> out;
  out.reserve(work.size());
  for (MergeBin& b : work) out.emplace_back(std::move(b.items));
  return out;
}

std::vector<Bin> ReplayMerges(const Instance& instance, std::vector<Bin> bins,
                              std::span<const MergeEvent> merges) {
  auto find = [&](ItemId first) {
    auto it = std::find_if(bins.begin(), bins.end(),
                           [&](const Bin& b) { return b.front() == first; });
    if (it == bins.end()) {
      throw InvalidArgumentError("merge names missing bin " +
                                 std::to_string(first));
    }
    return it;
  };
  for (const MergeEvent& e : merges) {
    if (e.first == e.second) {
      throw InvalidArgumentError("merge of bin " + std::to_string(e.first) +
                                 " with itself");
    }
    std::vector<ItemId> items;
    const auto a = find(e.first);
    items.assign(a->items().begin(), a->items().end());
    const auto b = find(e.second);
    items.insert(items.end(), b->items().begin(), b->items().end());
    if (Load(instance, items) != e.merged_load) {
      throw InvalidArgumentError("merge of bins " + std::to_string(e.first) +
                                 " and " + std::to_string(e.second) +
                                 " logged with wrong load");
    }
    bins.erase(find(e.first));
    bins.erase(find(e.second));
    bins.emplace_back(std::move(items));
  }
  return bins;
}

TwoPhaseResult TwoPhase(const Instance& instance, InnerAlgorithm inner,
                        const TwoPhaseOptions& options) {
  TwoPhaseResult result;
  result.trace = Phase1(instance, inner, options);
  result.trace.final_bins =
      MergePhase(instance, result.trace.phase1_bins, &result.trace.merges);
  result.solution.bins = result.trace.final_bins;
  result.alpha = CertifiedAlpha(inner);
  return result;
}

}  // namespace bpps
