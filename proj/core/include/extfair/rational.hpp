// Copyright 2026 The extfair Authors
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

#ifndef EXTFAIR_RATIONAL_HPP
#define EXTFAIR_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace extfair {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always stored in lowest terms with a positive denominator. Every
/// operation computes in 128-bit intermediates and throws
/// std::overflow_error if the reduced result does not fit in 64 bits, so a
/// result is either exact or an exception, never a rounded value.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT: implicit promotion from integers
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
  /// text or a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] constexpr std::int64_t numerator() const noexcept { return num_; }
  [[nodiscard]] constexpr std::int64_t denominator() const noexcept { return den_; }
  [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }
  [[nodiscard]] constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

 private:
  static Rational from_wide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& value);

std::ostream& operator<<(std::ostream& out, const Rational& value);

}  // namespace extfair

template <>
struct std::hash<extfair::Rational> {
  std::size_t operator()(const extfair::Rational& value) const noexcept {
    return std::hash<std::int64_t>{}(value.numerator()) * 31u ^
           std::hash<std::int64_t>{}(value.denominator());
  }
};

#endif  // EXTFAIR_RATIONAL_HPP
