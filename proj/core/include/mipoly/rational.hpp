#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mipoly {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every operator returns a fully
/// evaluated Rational, so generic code can use `auto` without holding on to
/// GMP expression templates.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& value);

  /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed
  /// input and std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  /// Integer value; throws std::domain_error unless is_integer() and it fits.
  long to_long() const;
  double to_double() const { return value_.get_d(); }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
};

Rational abs(const Rational& r);
Rational inverse(const Rational& r);
/// r^e for any integer e; negative exponents require r != 0.
Rational pow(const Rational& r, long e);
/// Smallest integer >= r.
mpz_class ceil(const Rational& r);
/// Largest integer <= r.
mpz_class floor(const Rational& r);
/// Nearest dyadic rational m / 2^bits (round half away from zero).
Rational round_dyadic(const Rational& r, unsigned bits);
/// 10^-digits as an exact rational.
Rational decimal_epsilon(unsigned digits);

}  // namespace mipoly
