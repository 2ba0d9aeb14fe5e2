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

#include "hnpoly/rational.hpp"

#include <utility>

#include "hnpoly/error.hpp"

namespace hnpoly {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt pow10(unsigned long exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

// Round-half-away-from-zero of a nonnegative num/den.
BigInt round_nonnegative(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) ++q;
  return q;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  // mpq_class lacks a portable int64 constructor on every platform.
  value_ = mpq_class(BigInt(std::to_string(value)));
}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(Errc::kInvalidArgument, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(Errc::kInvalidRational,
                "expected [-]digits(/digits)?, got \"" + std::string(text) + "\"");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw Error(Errc::kInvalidRational,
                "zero denominator in \"" + std::string(text) + "\"");
  }
  if (negative) n = -n;
  return Rational(n, d);
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int significant) const {
  if (significant < 1) significant = 1;
  if (sign() == 0) return "0";

  BigInt num = abs(value_.get_num());
  const BigInt& den = value_.get_den();

  // Decimal exponent e with 10^e <= |x| < 10^(e+1); start from a size
  // estimate and correct.
  long exponent = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
                  static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto at_least_pow10 = [&](long e) {
    // |x| >= 10^e  <=>  num * 10^-e >= den
    if (e >= 0) return num >= den * pow10(static_cast<unsigned long>(e));
    return num * pow10(static_cast<unsigned long>(-e)) >= den;
  };
  while (!at_least_pow10(exponent)) --exponent;
  while (at_least_pow10(exponent + 1)) ++exponent;

  // digits = round(|x| * 10^(significant - 1 - exponent))
  long shift = significant - 1 - exponent;
  BigInt digits = shift >= 0
      ? round_nonnegative(num * pow10(static_cast<unsigned long>(shift)), den)
      : round_nonnegative(num, den * pow10(static_cast<unsigned long>(-shift)));
  if (digits == pow10(static_cast<unsigned long>(significant))) {
    digits /= 10;
    ++exponent;
  }
  std::string d = digits.get_str();

  std::string out = sign() < 0 ? "-" : "";
  if (exponent >= 0 && exponent < significant) {
    out += d.substr(0, static_cast<std::size_t>(exponent) + 1);
    if (static_cast<std::size_t>(exponent) + 1 < d.size()) {
      out += "." + d.substr(static_cast<std::size_t>(exponent) + 1);
    }
  } else if (exponent < 0 && exponent >= -6) {
    out += "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + d;
  } else {
    out += d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    out += (exponent < 0 ? "e-" : "e+");
    std::string e = std::to_string(exponent < 0 ? -exponent : exponent);
    if (e.size() < 2) e.insert(0, "0");
    out += e;
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) throw Error(Errc::kInvalidArgument, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace hnpoly
