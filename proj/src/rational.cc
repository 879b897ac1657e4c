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

#include "ipcut/rational.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "ipcut/errors.h"

namespace ipcut {
namespace {

Wide Abs(Wide v) { return v < 0 ? -v : v; }

// Floor division for den > 0.
Wide FloorDiv(Wide num, Wide den) {
  Wide q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

// Compares a/b with c/d (b, d > 0) without forming products that could
// overflow, by walking the continued fraction expansions.
std::strong_ordering CompareFractions(Wide a, Wide b, Wide c, Wide d) {
  while (true) {
    const Wide qa = FloorDiv(a, b);
    const Wide qc = FloorDiv(c, d);
    if (qa != qc) return qa <=> qc;
    const Wide ra = a - qa * b;  // In [0, b).
    const Wide rc = c - qc * d;
    if (ra == 0 || rc == 0) return ra <=> rc;
    // ra/b < rc/d  <=>  d/rc < b/ra.
    const Wide next_a = d, next_b = rc, next_c = b, next_d = ra;
    a = next_a;
    b = next_b;
    c = next_c;
    d = next_d;
  }
}

}  // namespace

Wide CheckedAdd(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError(
        "128-bit overflow in addition; reduce weight magnitudes");
  }
  return r;
}

Wide CheckedSub(Wide a, Wide b) {
  Wide r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError(
        "128-bit overflow in subtraction; reduce weight magnitudes");
  }
  return r;
}

Wide CheckedMul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError(
        "128-bit overflow in multiplication; reduce weight magnitudes");
  }
  return r;
}

std::string WideToString(Wide v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work with negative values so that the minimum value is handled.
  Wide x = negative ? v : -v;
  std::string digits;
  while (x != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
    x /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Wide ParseWide(const std::string& text) {
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected integer, got '" + text + "'", 0);
  Wide v = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected integer, got '" + text + "'", 0);
    }
    v = CheckedAdd(CheckedMul(v, 10), text[i] - '0');
  }
  return negative ? -v : v;
}

Wide Gcd(Wide a, Wide b) {
  a = Abs(a);
  b = Abs(b);
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational::Rational(Wide num, Wide den) {
  if (den == 0) throw UndefinedRatioError("zero denominator");
  if (den < 0) {
    num = CheckedSub(0, num);
    den = CheckedSub(0, den);
  }
  const Wide g = Gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Wide Rational::FloorScaled(Wide scale) const {
  return FloorDiv(CheckedMul(num_, scale), den_);
}

Wide Rational::CeilScaled(Wide scale) const {
  return -FloorDiv(CheckedMul(-num_, scale), den_);
}

double Rational::ToDouble() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::ToString() const {
  if (den_ == 1) return WideToString(num_);
  return WideToString(num_) + "/" + WideToString(den_);
}

std::string Rational::ToDecimal(int digits) const {
  if (digits < 0) digits = 0;
  Wide pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 = CheckedMul(pow10, 10);
  const bool negative = num_ < 0;
  const Wide a = Abs(num_);
  // round(a * 10^digits / den) half away from zero.
  const Wide scaled = CheckedMul(a, pow10);
  Wide q = scaled / den_;
  const Wide r = scaled % den_;
  if (CheckedMul(r, 2) >= den_) ++q;
  std::string whole = WideToString(q / pow10);
  std::string out = (negative && q != 0) ? "-" + whole : whole;
  if (digits > 0) {
    std::string frac = WideToString(q % pow10);
    out += "." + std::string(digits - frac.size(), '0') + frac;
  }
  return out;
}

Rational Rational::Parse(const std::string& text) {
  const size_t slash = text.find('/');
  if (slash != std::string::npos) {
    return Rational(ParseWide(text.substr(0, slash)),
                    ParseWide(text.substr(slash + 1)));
  }
  const size_t dot = text.find('.');
  if (dot == std::string::npos) return Rational(ParseWide(text));
  const std::string frac = text.substr(dot + 1);
  Wide den = 1;
  for (size_t i = 0; i < frac.size(); ++i) den = CheckedMul(den, 10);
  std::string head = text.substr(0, dot);
  const bool negative = !head.empty() && head[0] == '-';
  if (head.empty() || head == "-" || head == "+") head += "0";
  const Wide whole = Abs(ParseWide(head));
  const Wide part = frac.empty() ? 0 : ParseWide(frac);
  if (!frac.empty() && (frac[0] == '-' || frac[0] == '+')) {
    throw ParseError("malformed decimal '" + text + "'", 0);
  }
  const Wide num = CheckedAdd(CheckedMul(whole, den), part);
  return Rational(negative ? -num : num, den);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(CheckedAdd(CheckedMul(a.num_, b.den_),
                             CheckedMul(b.num_, a.den_)),
                  CheckedMul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  const Wide g1 = Gcd(a.num_, b.den_);
  const Wide g2 = Gcd(b.num_, a.den_);
  const Wide n1 = g1 > 1 ? a.num_ / g1 : a.num_;
  const Wide d2 = g1 > 1 ? b.den_ / g1 : b.den_;
  const Wide n2 = g2 > 1 ? b.num_ / g2 : b.num_;
  const Wide d1 = g2 > 1 ? a.den_ / g2 : a.den_;
  return Rational(CheckedMul(n1, n2), CheckedMul(d1, d2));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw UndefinedRatioError("division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs, rhs;
  if (!__builtin_mul_overflow(a.num_, b.den_, &lhs) &&
      !__builtin_mul_overflow(b.num_, a.den_, &rhs)) {
    return lhs <=> rhs;
  }
  return CompareFractions(a.num_, a.den_, b.num_, b.den_);
}

}  // namespace ipcut
