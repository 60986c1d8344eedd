#pragma once

#include <gmpxx.h>

#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace eulercf {

// Exact rational number. Invariant: always in lowest terms, denominator > 0,
// zero is 0/1. All arithmetic is exact; there is no implicit float path.
class Rational {
 public:
  Rational() : value_(0) {}

  template <std::integral T>
  Rational(T value) {  // NOLINT: implicit by design, numeric wrapper
    if constexpr (std::is_signed_v<T>) {
      value_ = mpq_class(mpz_class(static_cast<long>(value)));
    } else {
      value_ = mpq_class(mpz_class(static_cast<unsigned long>(value)));
    }
  }

  Rational(const mpz_class& value) : value_(value) {}  // NOLINT: implicit
  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long num, long den);

  // Parses "p/q" or "p" (optional sign, decimal digits). Anything else throws.
  static Rational from_string(std::string_view text);
  // Parses a plain decimal string like "-12.0625" into the exact value.
  static Rational from_decimal(std::string_view text);
  // Exact value of the binary double (no rounding).
  static Rational from_double(double value);

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  Rational abs() const;
  Rational reciprocal() const;  // throws PreconditionError on zero

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws PreconditionError on /0

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  double to_double() const { return value_.get_d(); }
  // "p/q", or just "p" when the value is an integer.
  std::string to_string() const;
  // Fixed significant-digit decimal rendering, round half away from zero,
  // never scientific notation ("0.50000000000000000", "0.0000000095471...").
  std::string to_decimal(int significant_digits) const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

// Exact binomial coefficient C(n, k); k > n yields 0.
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace eulercf
