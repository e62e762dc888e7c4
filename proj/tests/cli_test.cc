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

#include "cli.h"

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "bpps/io.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace bpps::cli {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

// Column `index` (0-based) of every data row in a CSV document.
std::vector<std::string> Column(const std::string& csv, int index) {
  std::vector<std::string> values;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string field;
    for (int k = 0; k <= index; ++k) std::getline(fields, field, ',');
    values.push_back(field);
  }
  return values;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bpps_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  std::string Generate(const std::string& family, int n,
                       const std::string& name) {
    const Outcome o = Call({"generate", "--family", family, "--n",
                            std::to_string(n), "--out", Path(name)});
    EXPECT_EQ(o.code, kOk) << o.err;
    return Path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, GenerateNfWorstIsI4) {
  const Outcome o = Call({"generate", "--family", "nf-worst", "--n", "4"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(o.out, FormatInstance(testing::I4()));
}

TEST_F(CliTest, GenerateRejectsBadFamilySize) {
  const Outcome o = Call({"generate", "--family", "ffbf-worst", "--n", "5"});
  EXPECT_EQ(o.code, kUsage);
  EXPECT_THAT(o.err, HasSubstr("n must be divisible by 6"));
  EXPECT_EQ(Call({"generate", "--family", "zigzag", "--n", "5"}).code, kUsage);
}

TEST_F(CliTest, GenerateRandomIsDeterministic) {
  const std::vector<std::string> args = {"generate", "--family", "random",
                                         "--n", "6", "--seed", "7"};
  const Outcome a = Call(args);
  const Outcome b = Call(args);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(ParseInstance(a.out));

  const Outcome ranged =
      Call({"generate", "--family", "random", "--n", "9", "--seed", "3",
            "--m", "3", "--d", "20", "--w", "2", "9", "--s", "1", "--f", "0",
            "0", "--r", "4"});
  ASSERT_EQ(ranged.code, kOk) << ranged.err;
  const Instance inst = ParseInstance(ranged.out);
  EXPECT_EQ(inst.num_classes(), 3);
  EXPECT_EQ(inst.capacity(), 20);
  EXPECT_EQ(inst.bin_cost(), 4);
  EXPECT_EQ(inst.setup_weight(2), 1);
}

TEST_F(CliTest, SolveExamples) {
  const std::string i4 = Generate("nf-worst", 4, "i4.txt");
  const std::string i6 = Generate("ffbf-worst", 6, "i6.txt");
  const std::string merge = Path("imerge.txt");
  WriteFile(merge, FormatInstance(testing::IMerge()));

  Outcome o = Call({"solve", "--algorithm", "nf", "--instance", i4});
  EXPECT_EQ(o.code, kOk);
  EXPECT_THAT(o.out, HasSubstr("cost 4"));

  o = Call({"solve", "--algorithm", "exact", "--instance", i6});
  EXPECT_EQ(o.out, "algorithm exact bins 3 cost 3\n");

  o = Call({"solve", "--algorithm", "tp-ffd", "--instance", merge,
            "--solution-out", Path("sol.txt"), "--trace-out", Path("tr.txt")});
  EXPECT_EQ(o.code, kOk);
  EXPECT_THAT(o.out, HasSubstr("cost 1"));
  EXPECT_EQ(ReadFile(Path("tr.txt")),
            "phase1 2\n1\n2\nmerges 1\n1 2 8\nfinal 1\n1 2\n");
  const ParsedSolution sol = ParseSolution(ReadFile(Path("sol.txt")));
  EXPECT_TRUE(ValidateSolution(testing::IMerge(), sol.solution).ok());
  EXPECT_EQ(sol.declared_cost, 1);
}

TEST_F(CliTest, ExitCodes) {
  const std::string i4 = Generate("nf-worst", 4, "i4.txt");
  EXPECT_EQ(Call({"solve", "--algorithm", "worst-fit", "--instance", i4}).code,
            kUsage);
  EXPECT_EQ(Call({"solve", "--instance", i4}).code, kUsage);
  EXPECT_EQ(Call({}).code, kUsage);

  WriteFile(Path("bad.txt"), "4 2 3 1\n1 0\n1 0\n1 1\n");
  const Outcome parse =
      Call({"solve", "--algorithm", "nf", "--instance", Path("bad.txt")});
  EXPECT_EQ(parse.code, kParse);
  EXPECT_THAT(parse.err, HasSubstr("expected 4 item lines, found 1"));
  EXPECT_EQ(
      Call({"solve", "--algorithm", "nf", "--instance", Path("nope.txt")}).code,
      kParse);

  const std::string big = Generate("nf-worst", 16, "nf16.txt");
  const Outcome limit =
      Call({"solve", "--algorithm", "exact", "--instance", big});
  EXPECT_EQ(limit.code, kResourceLimit);
  const Outcome nodes = Call({"solve", "--algorithm", "exact", "--instance",
                              i4, "--node-limit", "0"});
  EXPECT_EQ(nodes.code, kResourceLimit);
  EXPECT_THAT(nodes.err, HasSubstr("incumbent"));
}

TEST_F(CliTest, BenchNfFamilyRatios) {
  fs::create_directories(Path("nf"));
  for (int n : {4, 8, 16}) {
    Generate("nf-worst", n, "nf/nf" + std::to_string(100 + n) + ".txt");
  }
  const Outcome o =
      Call({"bench", "--instances", Path("nf"), "--algorithms", "nf",
            "--reference", "exact", "--csv", "-", "--max-items", "16"});
  ASSERT_EQ(o.code, kOk) << o.err;
  EXPECT_EQ(Column(o.out, 6),
            (std::vector<std::string>{"2.000000", "4.000000", "8.000000"}));
  EXPECT_EQ(Column(o.out, 7), Column(o.out, 6));
  EXPECT_EQ(Column(o.out, 5),
            (std::vector<std::string>{"exact", "exact", "exact"}));
}

TEST_F(CliTest, BenchFfFamilyRatios) {
  Generate("ffbf-worst", 6, "ff06.txt");
  Generate("ffbf-worst", 12, "ff12.txt");
  const Outcome o = Call({"bench", "--instances", Path("ff*.txt"),
                          "--algorithms", "ff,bf", "--reference", "exact"});
  ASSERT_EQ(o.code, kOk) << o.err;
  EXPECT_EQ(Column(o.out, 1),
            (std::vector<std::string>{"ff", "bf", "ff", "bf"}));
  EXPECT_EQ(Column(o.out, 6),
            (std::vector<std::string>{"1.333333", "1.333333", "2.000000",
                                      "2.000000"}));
}

TEST_F(CliTest, BenchSkipsOversizedAndRejectsEmptySets) {
  Generate("nf-worst", 4, "a.txt");
  Generate("nf-worst", 16, "b.txt");
  const Outcome o = Call({"bench", "--instances", Path("*.txt"),
                          "--algorithms", "nf", "--reference", "exact"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_EQ(Column(o.out, 0), (std::vector<std::string>{"a.txt"}));
  EXPECT_THAT(o.err, HasSubstr("warning: skipping b.txt"));

  const Outcome lb = Call({"bench", "--instances", Path("*.txt"),
                           "--algorithms", "nf", "--reference", "lb"});
  EXPECT_EQ(Column(lb.out, 5),
            (std::vector<std::string>{"lb-weak", "lb-weak"}));
  EXPECT_EQ(Column(lb.out, 6),
            (std::vector<std::string>{"2.000000", "8.000000"}));

  EXPECT_EQ(Call({"bench", "--instances", Path("*.csv"), "--algorithms", "nf"})
                .code,
            kUsage);
}

TEST_F(CliTest, BenchRandomCorpusWithinThreeTimesOptimum) {
  fs::create_directories(Path("corpus"));
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    WriteFile(Path("corpus/r" + std::to_string(1000 + seed) + ".txt"),
              FormatInstance(testing::CorpusInstance(seed, 10)));
  }
  const Outcome o =
      Call({"bench", "--instances", Path("corpus"), "--algorithms", "tp-ffd",
            "--reference", "exact", "--jobs", "4"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const std::vector<std::string> ratios = Column(o.out, 6);
  ASSERT_EQ(ratios.size(), 100u);
  for (const std::string& r : ratios) {
    EXPECT_GE(std::stod(r), 1.0);
    EXPECT_LE(std::stod(r), 3.0);
  }
}

TEST_F(CliTest, BenchIsDeterministicAcrossJobCounts) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    WriteFile(Path("r" + std::to_string(100 + seed) + ".txt"),
              FormatInstance(testing::CorpusInstance(seed, 9)));
  }
  auto bench = [&](const std::string& jobs, const std::string& csv) {
    return Call({"bench", "--instances", Path("r*.txt"), "--algorithms",
                 "nf,ffd,tp-bfd,exact", "--jobs", jobs, "--csv", Path(csv)});
  };
  EXPECT_EQ(bench("1", "a.csv").code, kOk);
  EXPECT_EQ(bench("5", "b.csv").code, kOk);
  EXPECT_EQ(ReadFile(Path("a.csv")), ReadFile(Path("b.csv")));
}

}  // namespace
}  // namespace bpps::cli
