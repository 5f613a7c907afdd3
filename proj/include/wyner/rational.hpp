// Copyright 2026 The wynerdof Authors
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

#ifndef WYNER_RATIONAL_HPP
#define WYNER_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wyner {

/// Exact fraction in lowest terms with a positive denominator.
///
/// All DoF values (sums, per-user averages, bounds) are carried as Rationals
/// so that reports never depend on floating-point rounding.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  constexpr Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }
  [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }

  friend constexpr Rational operator+(Rational a, Rational b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    return {a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_};
  }
  friend constexpr Rational operator-(Rational a, Rational b) {
    return a + Rational(-b.num_, b.den_);
  }
  friend constexpr Rational operator*(Rational a, Rational b) {
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const std::int64_t n1 = g1 ? a.num_ / g1 : 0;
    const std::int64_t d2 = g1 ? b.den_ / g1 : b.den_;
    const std::int64_t n2 = g2 ? b.num_ / g2 : 0;
    const std::int64_t d1 = g2 ? a.den_ / g2 : a.den_;
    return {n1 * n2, d1 * d2};
  }
  friend constexpr Rational operator/(Rational a, Rational b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return a * Rational(b.den_, b.num_);
  }
  constexpr Rational& operator+=(Rational o) { return *this = *this + o; }
  constexpr Rational& operator-=(Rational o) { return *this = *this - o; }

  friend constexpr bool operator==(Rational a, Rational b) = default;
  friend constexpr std::strong_ordering operator<=>(Rational a, Rational b) {
    return (a - b).num_ <=> 0;
  }

  /// "p/q", or "p" when the value is an integer.
  [[nodiscard]] std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "p/q" or "p" with optional sign on p.
  static Rational parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, Rational r) {
    return os << r.str();
  }

 private:
  constexpr void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace wyner

#endif  // WYNER_RATIONAL_HPP
