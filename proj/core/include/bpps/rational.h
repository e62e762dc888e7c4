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

#ifndef BPPS_RATIONAL_H_
#define BPPS_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>

namespace bpps {

// Reduced fraction with a positive denominator. Used for approximation
// ratios and certified factors; solvers themselves stay in integers.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  double ToDouble() const { return static_cast<double>(num_) / den_; }

  // Decimal rendering rounded half away from zero, e.g. 4/3 -> "1.333333".
  std::string ToFixed(int digits = 6) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace bpps

#endif  // BPPS_RATIONAL_H_
