#pragma once

#include <iosfwd>
#include <string>

#include "mipoly/polynomial.hpp"

namespace mipoly {

/// Thrown when a requested limit runs into a pole of the reduced fraction.
class LimitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element of Q(t): a ratio of univariate polynomials in one deformation
/// parameter t.
///
/// Always reduced: gcd(numerator, denominator) = 1 and the denominator is
/// monic, so equal functions have identical representations.
class ParamRationalFunction {
 public:
  using Poly = Polynomial<Rational>;

  ParamRationalFunction() : num_(), den_(Poly::constant(Rational(1))) {}
  ParamRationalFunction(const Rational& value)  // NOLINT(google-explicit-constructor)
      : num_(Poly::constant(value)), den_(Poly::constant(Rational(1))) {}
  ParamRationalFunction(Poly numerator, Poly denominator);

  /// The parameter t itself.
  static ParamRationalFunction parameter();

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Value at t0; throws LimitError if t0 is a pole.
  Rational evaluate(const Rational& t0) const;

  std::string str() const;

  ParamRationalFunction operator-() const;
  friend ParamRationalFunction operator+(const ParamRationalFunction& lhs, const ParamRationalFunction& rhs);
  friend ParamRationalFunction operator-(const ParamRationalFunction& lhs, const ParamRationalFunction& rhs);
  friend ParamRationalFunction operator*(const ParamRationalFunction& lhs, const ParamRationalFunction& rhs);
  friend ParamRationalFunction operator/(const ParamRationalFunction& lhs, const ParamRationalFunction& rhs);
  friend bool operator==(const ParamRationalFunction& lhs, const ParamRationalFunction& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }

 private:
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const ParamRationalFunction& f);

/// Limit of f as t -> t0. Because f is stored reduced, this is the value of
/// the fraction at t0; a vanishing denominator means a genuine pole.
Rational limit_at(const ParamRationalFunction& f, const Rational& t0);

template <>
struct FieldTraits<ParamRationalFunction> {
  static constexpr bool exact = true;
  static ParamRationalFunction from_rational(const Rational& r) { return ParamRationalFunction(r); }
  static bool is_zero(const ParamRationalFunction& f) { return f.is_zero(); }
};

}  // namespace mipoly
