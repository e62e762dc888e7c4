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

#include "bpps/rational.h"

#include <numeric>
#include <string>

#include "bpps/errors.h"

namespace bpps {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgumentError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  return static_cast<__int128>(a.num_) * b.den_ <=>
         static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::ToFixed(int digits) const {
  const bool negative = num_ < 0;
  unsigned __int128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const unsigned __int128 mag =
      static_cast<unsigned __int128>(negative ? -num_ : num_);
  const unsigned __int128 den = static_cast<unsigned __int128>(den_);
  const unsigned __int128 scaled = (mag * scale * 2 + den) / (den * 2);
  const auto whole = static_cast<std::uint64_t>(scaled / scale);
  auto frac = static_cast<std::uint64_t>(scaled % scale);

  std::string out = negative && scaled != 0 ? "-" : "";
  out += std::to_string(whole);
  if (digits > 0) {
    std::string f = std::to_string(frac);
    out += '.';
    out += std::string(digits - f.size(), '0') + f;
  }
  return out;
}

}  // namespace bpps
