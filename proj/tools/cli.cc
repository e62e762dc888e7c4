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

#include <glob.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bpps/bounds.h"
#include "bpps/errors.h"
#include "bpps/exact.h"
#include "bpps/generators.h"
#include "bpps/io.h"
#include "bpps/report.h"
#include "bpps/solve.h"

namespace bpps::cli {

namespace {

namespace fs = std::filesystem;

struct SolveFlags {
  std::string algorithm;
  std::string instance;
  std::string solution_out;
  std::string trace_out;
  std::int64_t node_limit = kDefaultNodeLimit;
  int max_items = kDefaultExactItemLimit;
};

struct GenerateFlags {
  std::string family;
  int n = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::vector<std::int64_t> classes;
  std::vector<std::int64_t> capacity;
  std::vector<std::int64_t> bin_cost;
  std::vector<std::int64_t> weight;
  std::vector<std::int64_t> setup_weight;
  std::vector<std::int64_t> setup_cost;
};

struct BenchFlags {
  std::string instances;
  std::string algorithms;
  std::string reference = "exact";
  std::string csv;
  bool timing = false;
  int jobs = 1;
  std::int64_t node_limit = kDefaultNodeLimit;
  int max_items = kDefaultExactItemLimit;
};

SolveOptions MakeSolveOptions(std::int64_t node_limit, int max_items) {
  SolveOptions options;
  options.exact.node_limit = node_limit;
  options.exact.max_items = max_items;
  options.two_phase.node_limit = node_limit;
  return options;
}

int CmdSolve(const SolveFlags& flags, std::ostream& out, std::ostream& err) {
  const AlgorithmId algorithm = AlgorithmId::FromName(flags.algorithm);
  const Instance instance = ReadInstanceFile(flags.instance);
  try {
    const SolveResult result = Solve(
        algorithm, instance, MakeSolveOptions(flags.node_limit, flags.max_items));
    out << "algorithm " << algorithm.name() << " bins "
        << result.solution.num_bins() << " cost " << result.cost;
    if (result.trace) out << " merges " << result.trace->merges.size();
    out << '\n';
    if (!flags.solution_out.empty()) {
      WriteFile(flags.solution_out, FormatSolution(instance, result.solution));
    }
    if (!flags.trace_out.empty()) {
      if (!result.trace) {
        err << "warning: --trace-out ignored; " << algorithm.name()
            << " is not a two-phase algorithm\n";
      } else {
        WriteFile(flags.trace_out, FormatTrace(*result.trace));
      }
    }
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    if (e.incumbent()) {
      err << "best incumbent: bins " << e.incumbent()->num_bins() << " cost "
          << SolutionCost(instance, *e.incumbent()) << '\n';
    }
    return kResourceLimit;
  }
  return kOk;
}

Range ToRange(const std::vector<std::int64_t>& values, Range fallback) {
  if (values.empty()) return fallback;
  if (values.size() == 1) return {values[0], values[0]};
  return {values[0], values[1]};
}

int CmdGenerate(const GenerateFlags& flags, std::ostream& out) {
  std::optional<Cost> bin_cost;
  if (!flags.bin_cost.empty()) bin_cost = flags.bin_cost[0];

  Instance instance;
  if (flags.family == "nf-worst") {
    instance = NfWorstInstance(flags.n, bin_cost.value_or(1));
  } else if (flags.family == "ffbf-worst") {
    instance = FfBfWorstInstance(flags.n, bin_cost.value_or(1));
  } else if (flags.family == "random") {
    RandomParams params;
    params.n = flags.n;
    params.seed = flags.seed;
    params.classes = ToRange(
        flags.classes, {1, std::min<std::int64_t>(params.classes.hi, flags.n)});
    params.capacity = ToRange(flags.capacity, params.capacity);
    params.bin_cost = ToRange(flags.bin_cost, params.bin_cost);
    params.weight = ToRange(flags.weight, params.weight);
    params.setup_weight = ToRange(flags.setup_weight, params.setup_weight);
    params.setup_cost = ToRange(flags.setup_cost, params.setup_cost);
    instance = RandomInstance(params);
  } else {
    throw InvalidArgumentError("unknown family '" + flags.family + "'");
  }

  const std::string text = FormatInstance(instance);
  if (flags.out.empty()) {
    out << text;
  } else {
    WriteFile(flags.out, text);
  }
  return kOk;
}

std::vector<fs::path> CollectInstances(const std::string& pattern) {
  std::vector<fs::path> paths;
  if (fs::is_directory(pattern)) {
    for (const auto& entry : fs::directory_iterator(pattern)) {
      if (entry.is_regular_file()) paths.push_back(entry.path());
    }
  } else {
    glob_t matches{};
    if (::glob(pattern.c_str(), 0, nullptr, &matches) == 0) {
      for (std::size_t i = 0; i < matches.gl_pathc; ++i) {
        if (fs::is_regular_file(matches.gl_pathv[i])) {
          paths.emplace_back(matches.gl_pathv[i]);
        }
      }
    }
    ::globfree(&matches);
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

std::vector<std::string> SplitList(const std::string& list) {
  std::vector<std::string> parts;
  std::stringstream in(list);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

struct InstanceRows {
  std::vector<std::string> rows;
  std::string warnings;
};

InstanceRows BenchOne(const fs::path& path,
                      const std::vector<AlgorithmId>& algorithms,
                      const BenchFlags& flags) {
  using Clock = std::chrono::steady_clock;
  InstanceRows result;
  const std::string id = path.filename().string();
  const Instance instance = ReadInstanceFile(path);
  const SolveOptions options = MakeSolveOptions(flags.node_limit, flags.max_items);

  Cost reference = 0;
  std::string source;
  if (flags.reference == "exact") {
    try {
      reference = ExactBpps(instance, options.exact).value;
      source = "exact";
    } catch (const ResourceLimitError& e) {
      result.warnings += "warning: skipping " + id + ": " + e.what() + "\n";
      return result;
    }
  } else {
    reference = CombinatorialLowerBound(instance, BoundStrength::kWeak);
    source = "lb-weak";
  }

  for (const AlgorithmId& algorithm : algorithms) {
    try {
      const auto start = Clock::now();
      const SolveResult solved = Solve(algorithm, instance, options);
      const auto stop = Clock::now();
      RatioReport report =
          MakeReport(id, algorithm, instance, solved, reference, source);
      if (flags.timing) {
        report.wall_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
      }
      result.rows.push_back(FormatCsvRow(report));
    } catch (const ResourceLimitError& e) {
      result.warnings += "warning: skipping " + id + " with " +
                         algorithm.name() + ": " + e.what() + "\n";
    }
  }
  return result;
}

int CmdBench(const BenchFlags& flags, std::ostream& out, std::ostream& err) {
  if (flags.reference != "exact" && flags.reference != "lb") {
    throw InvalidArgumentError("--reference must be 'exact' or 'lb'");
  }
  std::vector<AlgorithmId> algorithms;
  for (const std::string& name : SplitList(flags.algorithms)) {
    algorithms.push_back(AlgorithmId::FromName(name));
  }
  if (algorithms.empty()) throw InvalidArgumentError("no algorithms given");
  const std::vector<fs::path> paths = CollectInstances(flags.instances);
  if (paths.empty()) {
    throw InvalidArgumentError("no instances match '" + flags.instances + "'");
  }

  // Batches of `jobs` instances in flight; output keeps path order.
  std::vector<InstanceRows> results(paths.size());
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, flags.jobs));
  for (std::size_t begin = 0; begin < paths.size(); begin += jobs) {
    const std::size_t end = std::min(paths.size(), begin + jobs);
    std::vector<std::future<InstanceRows>> pending;
    for (std::size_t i = begin; i < end; ++i) {
      pending.push_back(std::async(std::launch::async, BenchOne,
                                   std::cref(paths[i]), std::cref(algorithms),
                                   std::cref(flags)));
    }
    for (std::size_t i = begin; i < end; ++i) {
      results[i] = pending[i - begin].get();
    }
  }

  std::string csv = std::string(kCsvHeader) + "\n";
  std::size_t rows = 0;
  for (const InstanceRows& r : results) {
    err << r.warnings;
    for (const std::string& row : r.rows) {
      csv += row + "\n";
      ++rows;
    }
  }
  if (flags.csv.empty() || flags.csv == "-") {
    out << csv;
  } else {
    WriteFile(flags.csv, csv);
    out << "wrote " << rows << " rows to " << flags.csv << '\n';
  }
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bin packing with setups: heuristics, two-phase approximation, "
               "exact oracle and benchmarks",
               "bpps"};
  app.require_subcommand(1);

  SolveFlags solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd
      ->add_option("--algorithm", solve.algorithm,
                   "nf, ff, bf, nfd, ffd, bfd, tp-<inner>, exact")
      ->required();
  solve_cmd->add_option("--instance", solve.instance, "Instance file")
      ->required();
  solve_cmd->add_option("--solution-out", solve.solution_out,
                        "Write the solution here");
  solve_cmd->add_option("--trace-out", solve.trace_out,
                        "Write the two-phase trace here");
  solve_cmd->add_option("--node-limit", solve.node_limit,
                        "Exact search node limit");
  solve_cmd->add_option("--max-items", solve.max_items,
                        "Largest instance the exact oracle accepts");

  GenerateFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("generate", "Generate an instance");
  gen_cmd->add_option("--family", gen.family, "nf-worst, ffbf-worst, random")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Number of items")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default: stdout)");
  gen_cmd->add_option("--m", gen.classes, "Class count: value or lo hi")
      ->expected(1, 2);
  gen_cmd->add_option("--d", gen.capacity, "Capacity: value or lo hi")
      ->expected(1, 2);
  gen_cmd
      ->add_option("--r", gen.bin_cost,
                   "Bin cost: value or lo hi (families: value only)")
      ->expected(1, 2);
  gen_cmd->add_option("--w", gen.weight, "Item weight: value or lo hi")
      ->expected(1, 2);
  gen_cmd->add_option("--s", gen.setup_weight, "Setup weight: value or lo hi")
      ->expected(1, 2);
  gen_cmd->add_option("--f", gen.setup_cost, "Setup cost: value or lo hi")
      ->expected(1, 2);

  BenchFlags bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Ratio table over a set of instances");
  bench_cmd->add_option("--instances", bench.instances, "Directory or glob")
      ->required();
  bench_cmd->add_option("--algorithms", bench.algorithms, "Comma list")
      ->required();
  bench_cmd->add_option("--reference", bench.reference, "exact or lb");
  bench_cmd->add_option("--csv", bench.csv, "Output CSV (default: stdout)");
  bench_cmd->add_flag("--timing", bench.timing,
                      "Fill wall_ms (makes output run-dependent)");
  bench_cmd->add_option("--jobs", bench.jobs, "Instances solved concurrently");
  bench_cmd->add_option("--node-limit", bench.node_limit,
                        "Exact search node limit");
  bench_cmd->add_option("--max-items", bench.max_items,
                        "Largest instance the exact oracle accepts");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (solve_cmd->parsed()) return CmdSolve(solve, out, err);
    if (gen_cmd->parsed()) return CmdGenerate(gen, out);
    if (bench_cmd->parsed()) return CmdBench(bench, out, err);
  } catch (const InvalidArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }
  return kUsage;
}

}  // namespace bpps::cli
