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

#include "bpps/generators.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bpps/errors.h"

namespace bpps {

namespace {

void CheckRange(const Range& range, std::int64_t min_lo, const char* name) {
  if (range.lo > range.hi) {
    throw InvalidArgumentError(std::string(name) + " range is empty");
  }
  if (range.lo < min_lo) {
    throw InvalidArgumentError(std::string(name) + " range must start at >= " +
                               std::to_string(min_lo));
  }
}

}  // namespace

Instance NfWorstInstance(int n, Cost bin_cost) {
  if (n < 4 || n % 2 != 0) {
    throw InvalidArgumentError("n must be even and >= 4");
  }
  const Weight setup = n / 2 - 1;
  std::vector<Item> items;
  for (int i = 0; i < n; ++i) items.push_back({1, i % 2 + 1});
  return Instance(n - 1, bin_cost, {{setup, 0}, {setup, 0}}, std::move(items));
}

Instance FfBfWorstInstance(int n, Cost bin_cost) {
  if (n < 6 || n % 6 != 0) {
    throw InvalidArgumentError("n must be divisible by 6");
  }
  const int third = n / 3;
  const int sixth = n / 6;
  std::vector<Item> items;
  for (int k = 0; k < sixth; ++k) {
    for (ClassId c : {1, 2, 3, 3}) items.push_back({1, c});
  }
  for (int k = 0; k < sixth; ++k) items.push_back({1, 1});
  for (int k = 0; k < sixth; ++k) items.push_back({1, 2});
  return Instance(2 * third - 1, bin_cost,
                  {{third - 1, 0}, {third - 1, 0}, {third - 2, 0}},
                  std::move(items));
}

std::uint64_t SplitMix64::Next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::Uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(Next() % span);
}

Instance RandomInstance(const RandomParams& p) {
  if (p.n < 1) throw InvalidArgumentError("n must be >= 1");
  CheckRange(p.classes, 1, "class count");
  CheckRange(p.capacity, 1, "capacity");
  CheckRange(p.bin_cost, 1, "bin cost");
  CheckRange(p.weight, 1, "weight");
  CheckRange(p.setup_weight, 0, "setup weight");
  CheckRange(p.setup_cost, 0, "setup cost");
  if (p.classes.hi > p.n) {
    throw InvalidArgumentError("class count range exceeds n = " +
                               std::to_string(p.n));
  }
  if (p.weight.lo + p.setup_weight.lo > p.capacity.lo) {
    throw InvalidArgumentError(
        "infeasible ranges: min weight + min setup weight > min capacity");
  }

  SplitMix64 rng(p.seed);
  const int m = static_cast<int>(rng.Uniform(p.classes.lo, p.classes.hi));
  const Weight d = rng.Uniform(p.capacity.lo, p.capacity.hi);
  const Cost r = rng.Uniform(p.bin_cost.lo, p.bin_cost.hi);

  std::vector<ItemClass> classes;
  for (int c = 0; c < m; ++c) {
    const Weight s = rng.Uniform(p.setup_weight.lo,
                                 std::min(p.setup_weight.hi, d - p.weight.lo));
    const Cost f = rng.Uniform(p.setup_cost.lo, p.setup_cost.hi);
    classes.push_back({s, f});
  }

  std::vector<ClassId> labels(p.n);
  for (int i = 0; i < p.n; ++i) labels[i] = i % m + 1;
  for (int i = p.n - 1; i > 0; --i) {
    std::swap(labels[i], labels[rng.Uniform(0, i)]);
  }

  std::vector<Item> items;
  for (int i = 0; i < p.n; ++i) {
    const ClassId c = labels[i];
    const Weight s = classes[c - 1].setup_weight;
    Weight w = rng.Uniform(p.weight.lo, p.weight.hi);
    if (w + s > d) w = rng.Uniform(p.weight.lo, std::min(p.weight.hi, d - s));
    items.push_back({w, c});
  }
  return Instance(d, r, std::move(classes), std::move(items));
}

}  // namespace bpps
