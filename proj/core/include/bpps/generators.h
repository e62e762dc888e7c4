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

#ifndef BPPS_GENERATORS_H_
#define BPPS_GENERATORS_H_

#include <cstdint>

#include "bpps/model.h"

namespace bpps {

// Next Fit worst case, n even and >= 4: two classes of n/2 unit items,
// d = n - 1, s_1 = s_2 = n/2 - 1, no setup costs, labels alternating
// 1,2,1,2,... Next Fit opens n bins; the optimum uses 2.
Instance NfWorstInstance(int n, Cost bin_cost = 1);

// First/Best Fit worst case, n divisible by 6: three classes of n/3 unit
// items, d = 2n/3 - 1, s_1 = s_2 = n/3 - 1, s_3 = n/3 - 2, no setup costs.
// Labels follow (1,2,3,3) n/6 times, then n/6 of class 1, then n/6 of
// class 2. FF and BF open n/3 + 2 bins; the optimum uses 3.
Instance FfBfWorstInstance(int n, Cost bin_cost = 1);

// SplitMix64 (Steele, Lea and Flood). Fixed constants so that corpora are
// reproducible across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();
  // Uniform on [lo, hi] via Next() % (hi - lo + 1).
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct RandomParams {
  int n = 8;
  std::uint64_t seed = 1;
  Range classes{1, 3};
  Range capacity{10, 10};
  Range bin_cost{1, 1};
  Range weight{1, 5};
  Range setup_weight{0, 3};
  Range setup_cost{0, 4};
};

// Deterministic in `params`. Draw order:
//   m, d, r; then (s_c, f_c) for c = 1..m with s_c capped at d - weight.lo;
//   labels (i mod m) + 1, Fisher-Yates shuffled from the back;
//   w_i per item, redrawn from [weight.lo, min(weight.hi, d - s_{c_i})]
//   when w_i + s_{c_i} > d.
// Throws InvalidArgumentError on empty or out-of-domain ranges, when
// weight.lo + setup_weight.lo > capacity.lo, or when m could exceed n.
Instance RandomInstance(const RandomParams& params);

}  // namespace bpps

#endif  // BPPS_GENERATORS_H_
