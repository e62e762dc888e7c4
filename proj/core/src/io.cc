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

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bpps/errors.h"

namespace bpps {

namespace {

struct Line {
  int number = 0;
  std::vector<std::int64_t> values;
};

std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
      }
      if (i == raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() &&
             !std::isspace(static_cast<unsigned char>(raw[j]))) {
        ++j;
      }
      const std::string_view token = raw.substr(i, j - i);
      std::int64_t value = 0;
      const auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(number,
                         "malformed token '" + std::string(token) + "'");
      }
      line.values.push_back(value);
      i = j;
    }
    if (!line.values.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

void ExpectFields(const Line& line, std::size_t count, const char* what) {
  if (line.values.size() != count) {
    throw ParseError(line.number, std::string("expected '") + what +
                                      "', found " +
                                      std::to_string(line.values.size()) +
                                      " fields");
  }
}

int CheckedCount(const Line& line, std::int64_t value, const char* name) {
  if (value < 1 || value > 100'000'000) {
    throw ParseError(line.number, std::string(name) + " = " +
                                      std::to_string(value) +
                                      " must be a positive count");
  }
  return static_cast<int>(value);
}

void AppendBin(std::ostringstream& out, const Bin& bin) {
  bool first = true;
  for (ItemId i : bin.items()) {
    if (!first) out << ' ';
    out << i;
    first = false;
  }
  out << '\n';
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty instance");
  const Line& header = lines[0];
  ExpectFields(header, 4, "n m d r");
  const int n = CheckedCount(header, header.values[0], "n");
  const int m = CheckedCount(header, header.values[1], "m");

  const int available = static_cast<int>(lines.size()) - 1;
  if (available < m) {
    throw ParseError(0, "expected " + std::to_string(m) +
                            " class lines, found " + std::to_string(available));
  }
  std::vector<ItemClass> classes;
  for (int c = 1; c <= m; ++c) {
    const Line& line = lines[c];
    ExpectFields(line, 2, "s_c f_c");
    classes.push_back({line.values[0], line.values[1]});
  }

  const int item_lines = available - m;
  if (item_lines < n) {
    throw ParseError(0, "expected " + std::to_string(n) +
                            " item lines, found " + std::to_string(item_lines));
  }
  if (item_lines > n) {
    throw ParseError(lines[1 + m + n].number,
                     "unexpected content after " + std::to_string(n) +
                         " item lines");
  }
  std::vector<Item> items;
  for (int i = 1; i <= n; ++i) {
    const Line& line = lines[m + i];
    ExpectFields(line, 2, "w_i c_i");
    if (line.values[1] < 1 || line.values[1] > m) {
      throw ParseError(line.number, "item " + std::to_string(i) + ": class " +
                                        std::to_string(line.values[1]) +
                                        " out of range 1.." +
                                        std::to_string(m));
    }
    items.push_back({line.values[0], static_cast<ClassId>(line.values[1])});
  }

  Instance instance(header.values[2], header.values[3], std::move(classes),
                    std::move(items));
  const Validation v = ValidateInstance(instance);
  if (!v.ok()) {
    std::string message;
    int first_line = 0;
    for (const Violation& violation : v.violations) {
      int line = header.number;
      if (violation.item > 0) line = lines[m + violation.item].number;
      if (violation.class_id > 0) line = lines[violation.class_id].number;
      if (first_line == 0) {
        first_line = line;
        message = violation.message;
      } else {
        message += "; line " + std::to_string(line) + ": " + violation.message;
      }
    }
    throw ParseError(first_line, message);
  }
  return instance;
}

std::string FormatInstance(const Instance& instance) {
  std::ostringstream out;
  out << instance.num_items() << ' ' << instance.num_classes() << ' '
      << instance.capacity() << ' ' << instance.bin_cost() << '\n';
  for (const ItemClass& c : instance.classes()) {
    out << c.setup_weight << ' ' << c.setup_cost << '\n';
  }
  for (const Item& item : instance.items()) {
    out << item.weight << ' ' << item.item_class << '\n';
  }
  return out.str();
}

ParsedSolution ParseSolution(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty solution");
  const Line& header = lines[0];
  ExpectFields(header, 2, "k total_cost");
  const std::int64_t k = header.values[0];
  if (k < 0 || k + 1 != static_cast<std::int64_t>(lines.size())) {
    throw ParseError(0, "expected " + std::to_string(k) + " bin lines, found " +
                            std::to_string(lines.size() - 1));
  }
  ParsedSolution parsed;
  parsed.declared_cost = header.values[1];
  for (std::size_t b = 1; b < lines.size(); ++b) {
    std::vector<ItemId> ids;
    for (std::int64_t v : lines[b].values) ids.push_back(static_cast<ItemId>(v));
    parsed.solution.bins.emplace_back(std::move(ids));
  }
  return parsed;
}

std::string FormatSolution(const Instance& instance, const Solution& solution) {
  const Solution canonical = Canonical(solution);
  std::ostringstream out;
  out << canonical.num_bins() << ' ' << SolutionCost(instance, canonical)
      << '\n';
  for (const Bin& bin : canonical.bins) AppendBin(out, bin);
  return out.str();
}

std::string FormatTrace(const PhaseTrace& trace) {
  std::ostringstream out;
  out << "phase1 " << trace.phase1_bins.size() << '\n';
  for (const Bin& bin : trace.phase1_bins) AppendBin(out, bin);
  out << "merges " << trace.merges.size() << '\n';
  for (const MergeEvent& e : trace.merges) {
    out << e.first << ' ' << e.second << ' ' << e.merged_load << '\n';
  }
  out << "final " << trace.final_bins.size() << '\n';
  for (const Bin& bin : trace.final_bins) AppendBin(out, bin);
  return out.str();
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Instance ReadInstanceFile(const std::filesystem::path& path) {
  try {
    return ParseInstance(ReadFile(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  }
}

}  // namespace bpps
