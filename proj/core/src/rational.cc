// Copyright 2026 The resil Authors
//
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

#include "resil/rational.h"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace resil {
namespace {

std::int64_t ParseInt(std::string_view s, std::string_view whole) {
  std::int64_t x = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (begin != end && *begin == '+') ++begin;
  auto r = std::from_chars(begin, end, x);
  if (r.ec != std::errc() || r.ptr != end || begin == end) {
    throw std::invalid_argument("not a rational: \"" + std::string(whole) +
                                "\"");
  }
  return x;
}

std::int64_t Narrow(__int128 x) {
  if (x > INT64_MAX || x < INT64_MIN) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<std::int64_t>(x);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::Parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInt(text, text), 1);
  return Rational(ParseInt(text.substr(0, slash), text),
                  ParseInt(text.substr(slash + 1), text));
}

std::string Rational::ToString() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t Rational::FloorTimes(std::int64_t x) const {
  const __int128 prod = static_cast<__int128>(num_) * x;
  __int128 q = prod / den_;
  if (prod % den_ != 0 && prod < 0) --q;
  return Narrow(q);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(Narrow(static_cast<__int128>(a.num_) * b.den_ +
                         static_cast<__int128>(b.num_) * a.den_),
                  Narrow(static_cast<__int128>(a.den_) * b.den_));
}

Rational operator-(const Rational& a, const Rational& b) {
  return a + Rational(-b.num_, b.den_);
}

}  // namespace resil
