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

#include "bpps/io.h"

#include <filesystem>
#include <string>

#include "bpps/errors.h"
#include "bpps/generators.h"
#include "bpps/heuristics.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace bpps {
namespace {

using ::bpps::testing::B;
using ::testing::HasSubstr;

constexpr char kI4Text[] =
    "4 2 3 1\n"
    "1 0\n"
    "1 0\n"
    "1 1\n"
    "1 2\n"
    "1 1\n"
    "1 2\n";

ParseError ExpectParseError(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return ParseError(0, "");
}

TEST(ParseInstanceTest, CanonicalI4) {
  EXPECT_EQ(ParseInstance(kI4Text), testing::I4());
  EXPECT_EQ(FormatInstance(ParseInstance(kI4Text)), kI4Text);
}

TEST(ParseInstanceTest, ToleratesExtraWhitespace) {
  EXPECT_EQ(ParseInstance("  4 2 3 1\n\n1\t0\n1 0\n1 1\n1 2\n1 1\n1 2"),
            testing::I4());
}

TEST(ParseInstanceTest, CountMismatch) {
  const ParseError e = ExpectParseError("4 2 3 1\n1 0\n1 0\n1 1\n1 2\n1 1\n");
  EXPECT_EQ(e.detail(), "expected 4 item lines, found 3");

  const ParseError extra = ExpectParseError(std::string(kI4Text) + "1 1\n");
  EXPECT_EQ(extra.line(), 8);
  EXPECT_THAT(extra.detail(), HasSubstr("unexpected content"));

  EXPECT_EQ(ExpectParseError("4 3 3 1\n1 0\n").detail(),
            "expected 3 class lines, found 1");
}

TEST(ParseInstanceTest, ViolationCarriesLineNumber) {
  // Class 1 setup 3 with d = 3: every class-1 item breaks w + s <= d.
  const ParseError e =
      ExpectParseError("2 1 3 1\n3 0\n1 1\n1 1\n");
  EXPECT_EQ(e.line(), 3);
  EXPECT_THAT(e.what(), HasSubstr("line 3: item 1: w+s = 4 > d = 3"));
  EXPECT_THAT(e.what(), HasSubstr("line 4: item 2: w+s = 4 > d = 3"));
}

TEST(ParseInstanceTest, MalformedInput) {
  const ParseError e = ExpectParseError("4 2 3 x\n");
  EXPECT_EQ(e.line(), 1);
  EXPECT_EQ(e.detail(), "malformed token 'x'");
  EXPECT_EQ(ExpectParseError("4 2 3\n").detail(),
            "expected 'n m d r', found 3 fields");
  EXPECT_EQ(ExpectParseError("").detail(), "empty instance");
  EXPECT_THAT(ExpectParseError("1 1 3 1\n0 0\n1 2\n").detail(),
              HasSubstr("class 2 out of range 1..1"));
}

TEST(ParseInstanceTest, RoundTripsGeneratedInstances) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Instance inst = testing::CorpusInstance(seed, 30);
    const std::string text = FormatInstance(inst);
    EXPECT_EQ(ParseInstance(text), inst);
    EXPECT_EQ(FormatInstance(ParseInstance(text)), text);
  }
}

TEST(SolutionTextTest, FormatIsCanonical) {
  const Solution s = {{B({2, 4}), B({3, 1})}};
  EXPECT_EQ(FormatSolution(testing::I4(), s), "2 2\n1 3\n2 4\n");
}

TEST(SolutionTextTest, RoundTrip) {
  const Instance inst = FfBfWorstInstance(12);
  const Solution s = RunHeuristic(Heuristic::kFf, inst);
  const std::string text = FormatSolution(inst, s);
  const ParsedSolution parsed = ParseSolution(text);
  EXPECT_EQ(parsed.declared_cost, 6);
  EXPECT_TRUE(ValidateSolution(inst, parsed.solution).ok());
  EXPECT_EQ(FormatSolution(inst, parsed.solution), text);
}

TEST(SolutionTextTest, RejectsBadCounts) {
  EXPECT_THROW(ParseSolution("3 2\n1 3\n2 4\n"), ParseError);
  EXPECT_THROW(ParseSolution("2\n1 3\n2 4\n"), ParseError);
}

TEST(TraceTextTest, Layout) {
  PhaseTrace t;
  t.phase1_bins = {B({1}), B({2})};
  t.merges = {{1, 2, 8}};
  t.final_bins = {B({1, 2})};
  EXPECT_EQ(FormatTrace(t), "phase1 2\n1\n2\nmerges 1\n1 2 8\nfinal 1\n1 2\n");
}

TEST(FileTest, ReadInstanceFileNamesSource) {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "bpps_io_test";
  std::filesystem::create_directories(dir);
  const std::filesystem::path good = dir / "i4.txt";
  const std::filesystem::path bad = dir / "bad.txt";
  WriteFile(good, kI4Text);
  WriteFile(bad, "4 2 3 1\n1 0\n");
  EXPECT_EQ(ReadInstanceFile(good), testing::I4());
  try {
    ReadInstanceFile(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.source(), bad.string());
    EXPECT_EQ(std::string(e.what()),
              bad.string() + ": expected 2 class lines, found 1");
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace bpps
