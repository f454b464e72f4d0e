#pragma once

#include <string>

#include "mipoly/rational.hpp"

namespace mipoly {

/// A real number known to lie in [value - radius, value + radius].
/// Exact quantities carry radius 0.
struct Certified {
  Rational value;
  Rational radius;

  static Certified exact(const Rational& v) { return {v, Rational(0)}; }

  bool is_exact() const { return radius.is_zero(); }
  Rational lower() const { return value - radius; }
  Rational upper() const { return value + radius; }
  bool contains(const Rational& x) const { return abs(x - value) <= radius; }
  std::string str() const;

  friend Certified operator*(const Certified& lhs, const Certified& rhs);
  friend Certified operator*(const Rational& lhs, const Certified& rhs);
  friend bool operator==(const Certified&, const Certified&) = default;
};

/// 1/x; throws std::domain_error when the interval contains zero.
Certified inverse(const Certified& x);

/// Infinite product (a;q)_inf with |q| < 1, certified to within eps.
///
/// The truncation error after N factors obeys |P - P_N| <= 2 S |P_N| with
/// S = |a| |q|^N / (1 - |q|) <= 1/2; the partial product is then rounded to a
/// dyadic rational so later arithmetic stays small.
Certified q_pochhammer_infinite(const Rational& a, const Rational& q, const Rational& eps = decimal_epsilon(30));

/// base^exponent for base > 0 and rational exponent, certified to within
/// eps. Integer exponents are exact. Otherwise a high-precision approximation
/// is bracketed and the bracket is confirmed by exact integer powers.
Certified certified_power(const Rational& base, const Rational& exponent, const Rational& eps = decimal_epsilon(30));

}  // namespace mipoly
