// Copyright 2026 The ipcut Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact rational numbers over 128-bit integers. Every ratio, lambda value
// and comparison in the library goes through this type; floating point is
// only used for display and timing.

#ifndef IPCUT_RATIONAL_H_
#define IPCUT_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>

namespace ipcut {

using Wide = __int128;

// Checked 128-bit arithmetic. Throw OverflowError on wraparound.
Wide CheckedAdd(Wide a, Wide b);
Wide CheckedSub(Wide a, Wide b);
Wide CheckedMul(Wide a, Wide b);

std::string WideToString(Wide v);
// Parses an optionally signed decimal integer. Throws ParseError.
Wide ParseWide(const std::string& text);

// Largest value representable by int64_t, as Wide.
inline constexpr Wide kInt64Max = static_cast<Wide>(INT64_MAX);

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Wide num) : num_(num), den_(1) {}  // NOLINT: implicit by design
  // Throws UndefinedRatioError when den == 0. Result is normalized.
  Rational(Wide num, Wide den);

  Wide num() const { return num_; }
  Wide den() const { return den_; }

  // floor(*this * scale) and ceil(*this * scale) for scale > 0.
  Wide FloorScaled(Wide scale) const;
  Wide CeilScaled(Wide scale) const;

  double ToDouble() const;
  // "P/Q", or "P" when the denominator is 1.
  std::string ToString() const;
  // Decimal with exactly `digits` fractional digits, rounded half away from
  // zero.
  std::string ToDecimal(int digits) const;
  // Parses "P/Q", an integer, or a finite decimal such as "29.557".
  static Rational Parse(const std::string& text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = CheckedSub(0, a.num_);
    r.den_ = a.den_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  Wide num_;
  Wide den_;  // Always > 0, gcd(|num_|, den_) == 1.
};

Wide Gcd(Wide a, Wide b);

}  // namespace ipcut

#endif  // IPCUT_RATIONAL_H_
