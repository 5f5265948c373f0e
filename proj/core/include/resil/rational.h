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

#ifndef RESIL_RATIONAL_H_
#define RESIL_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace resil {

// Reduced fraction with positive denominator. Budget inequalities of the form
// deg_H(v) <= alpha * deg_G(v) are decided exactly through cross
// multiplication, which is why alphas are never floats.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den);
  static Rational Integer(std::int64_t x) { return Rational(x, 1); }

  // Accepts "p/q" or "p" (optionally signed). Throws std::invalid_argument.
  static Rational Parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double ToDouble() const { return static_cast<double>(num_) / den_; }
  std::string ToString() const;

  // floor(*this * x) for x >= 0.
  std::int64_t FloorTimes(std::int64_t x) const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace resil

#endif  // RESIL_RATIONAL_H_
