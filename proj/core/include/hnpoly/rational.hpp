// Copyright 2026 The hnpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HNPOLY_RATIONAL_HPP_
#define HNPOLY_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace hnpoly {

// Arbitrary-precision integer.
using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
//
// Every constructor and arithmetic operator canonicalizes, so two Rationals
// compare equal exactly when their numerators and denominators agree.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value);
  // Throws Error(kInvalidArgument) when denominator is zero.
  Rational(const BigInt& numerator, const BigInt& denominator);

  // Parses "[-]digits" or "[-]digits/digits". Throws Error(kInvalidRational).
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // Largest integer <= *this and smallest integer >= *this.
  BigInt floor() const;
  BigInt ceil() const;

  double to_double() const { return value_.get_d(); }

  // "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  // Decimal rendering rounded (half away from zero) to `significant` digits.
  // Values with decimal exponent in [-6, significant) print in positional
  // notation, others in scientific notation ("d.ddd…e-NN").
  std::string to_decimal(int significant = 20) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  // Throws Error(kInvalidArgument) on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs,
                                          const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value);

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

// Exact decimal rendering of an integer.
inline std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace hnpoly

#endif  // HNPOLY_RATIONAL_HPP_
