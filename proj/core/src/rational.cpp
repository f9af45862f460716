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

#include "extfair/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace extfair {

namespace {

using wide = __int128;

constexpr wide kMax = std::numeric_limits<std::int64_t>::max();
constexpr wide kMin = std::numeric_limits<std::int64_t>::min();

wide wide_abs(wide v) { return v < 0 ? -v : v; }

wide wide_gcd(wide a, wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t out = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec == std::errc::result_out_of_range) {
    throw std::invalid_argument("integer out of 64-bit range: '" + std::string(text) + "'");
  }
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  return out;
}

}  // namespace

Rational Rational::from_wide(wide numerator, wide denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (wide g = wide_gcd(numerator, denominator); g > 1) {
    numerator /= g;
    denominator /= g;
  }
  if (numerator > kMax || numerator < kMin || denominator > kMax) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(numerator);
  r.den_ = static_cast<std::int64_t>(denominator);
  return r;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  *this = from_wide(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t p = parse_int(text.substr(0, slash));
  std::int64_t q = parse_int(text.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    if (__builtin_add_overflow(num_, rhs.num_, &num_)) {
      throw std::overflow_error("rational arithmetic overflow");
    }
    return *this;
  }
  *this = from_wide(wide(num_) * rhs.den_ + wide(rhs.num_) * den_, wide(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    if (__builtin_sub_overflow(num_, rhs.num_, &num_)) {
      throw std::overflow_error("rational arithmetic overflow");
    }
    return *this;
  }
  *this = from_wide(wide(num_) * rhs.den_ - wide(rhs.num_) * den_, wide(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(wide(num_) * rhs.num_, wide(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero");
  *this = from_wide(wide(num_) * rhs.den_, wide(den_) * rhs.num_);
  return *this;
}

Rational Rational::operator-() const { return from_wide(-wide(num_), den_); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
  if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
  wide l = wide(lhs.num_) * rhs.den_;
  wide r = wide(rhs.num_) * lhs.den_;
  return l < r ? std::strong_ordering::less
               : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::ostream& operator<<(std::ostream& out, const Rational& value) {
  return out << value.to_string();
}

}  // namespace extfair
