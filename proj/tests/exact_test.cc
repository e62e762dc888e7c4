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

#include <vector>

#include "bpps/bounds.h"
#include "bpps/errors.h"
#include "bpps/generators.h"
#include "bpps/heuristics.h"
#include "bpps/two_phase.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace bpps {
namespace {

using ::bpps::testing::BruteForceBinCount;
using ::bpps::testing::BruteForceOptimum;
using ::bpps::testing::CorpusInstance;
using ::bpps::testing::I4;
using ::bpps::testing::I6FF;
using ::bpps::testing::IMerge;

TEST(ExactBppsTest, Examples) {
  EXPECT_EQ(ExactBpps(I4()).value, 2);
  EXPECT_EQ(ExactBpps(I6FF()).value, 3);
  EXPECT_EQ(ExactBpps(IMerge()).value, 1);
}

TEST(ExactBppsTest, ResultIsValidAndConsistent) {
  const OptResult r = ExactBpps(I6FF(), {.class_optima = true});
  EXPECT_TRUE(ValidateSolution(I6FF(), r.solution).ok());
  EXPECT_EQ(SolutionCost(I6FF(), r.solution), r.value);
  EXPECT_EQ(r.class_optima, (std::vector<int>{1, 1, 1}));
  EXPECT_GT(r.nodes, 0);
}

TEST(ExactBppsTest, RejectsInstancesAboveItemLimit) {
  EXPECT_THROW(ExactBpps(NfWorstInstance(16)), ResourceLimitError);
  EXPECT_NO_THROW(ExactBpps(NfWorstInstance(16), {.max_items = 16}));
}

TEST(ExactBppsTest, NodeLimitCarriesIncumbent) {
  // A one-node budget stops the search at the root, after seeding.
  const Instance inst = CorpusInstance(17, 12);
  try {
    ExactBpps(inst, {.node_limit = 0});
    FAIL() << "expected ResourceLimitError";
  } catch (const ResourceLimitError& e) {
    ASSERT_TRUE(e.incumbent().has_value());
    EXPECT_TRUE(ValidateSolution(inst, *e.incumbent()).ok());
  }
}

TEST(ExactBppTest, Examples) {
  EXPECT_EQ(ExactBpp(std::vector<Weight>{1, 1}, 2).num_bins, 1);
  EXPECT_EQ(ExactBpp(std::vector<Weight>{2, 2, 2}, 3).num_bins, 3);
  const BppOptimum opt = ExactBpp(std::vector<Weight>{6, 3, 4, 1}, 10);
  EXPECT_EQ(opt.num_bins, 2);
  EXPECT_EQ(opt.bins.size(), 2u);
  EXPECT_EQ(ExactBpp(std::vector<Weight>{}, 5).num_bins, 0);
  EXPECT_THROW(ExactBpp(std::vector<Weight>{6}, 5), InfeasibleItemError);
}

TEST(ExactBppTest, MatchesBruteForce) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    SplitMix64 rng(seed);
    const int n = static_cast<int>(rng.Uniform(1, 9));
    const Weight capacity = rng.Uniform(5, 20);
    std::vector<Weight> w;
    for (int i = 0; i < n; ++i) w.push_back(rng.Uniform(1, capacity));
    EXPECT_EQ(ExactBpp(w, capacity).num_bins, BruteForceBinCount(w, capacity))
        << "seed " << seed;
  }
}

TEST(ExactBppTest, HandlesTwentyItemClasses) {
  SplitMix64 rng(99);
  std::vector<Weight> w;
  for (int i = 0; i < 20; ++i) w.push_back(rng.Uniform(10, 60));
  const BppOptimum opt = ExactBpp(w, 100);
  Weight total = 0;
  for (Weight x : w) total += x;
  EXPECT_GE(opt.num_bins, (total + 99) / 100);
}

// Oracle properties over a random corpus.
TEST(ExactPropertyTest, AgreesWithEnumeration) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance inst = CorpusInstance(seed, 8);
    EXPECT_EQ(ExactBpps(inst).value, BruteForceOptimum(inst))
        << "seed " << seed;
  }
}

TEST(ExactPropertyTest, NeverAboveHeuristicsNorBelowBound) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance inst = CorpusInstance(seed, 10);
    const Cost opt = ExactBpps(inst).value;
    for (Heuristic h : {Heuristic::kNf, Heuristic::kFf, Heuristic::kBf,
                        Heuristic::kNfd, Heuristic::kFfd, Heuristic::kBfd}) {
      EXPECT_LE(opt, SolutionCost(inst, RunHeuristic(h, inst)));
    }
    EXPECT_LE(opt,
              SolutionCost(inst, TwoPhase(inst, InnerAlgorithm::kNf).solution));
    EXPECT_GE(opt, CombinatorialLowerBound(inst));
  }
}

TEST(ExactPropertyTest, SingleClassWithoutSetupsIsPlainOptimum) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    RandomParams p = testing::CorpusParams(seed, 12);
    p.classes = {1, 1};
    p.setup_weight = {0, 0};
    p.setup_cost = {0, 0};
    const Instance inst = RandomInstance(p);
    std::vector<Weight> w;
    for (const Item& item : inst.items()) w.push_back(item.weight);
    EXPECT_EQ(ExactBpps(inst).value,
              inst.bin_cost() * ExactBpp(w, inst.capacity()).num_bins);
  }
}

TEST(ExactPropertyTest, FourteenItemsWithinDefaults) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    RandomParams p = testing::CorpusParams(seed, 14);
    p.n = 14;
    const Instance inst = RandomInstance(p);
    EXPECT_NO_THROW(ExactBpps(inst)) << "seed " << seed;
  }
}

}  // namespace
}  // namespace bpps
