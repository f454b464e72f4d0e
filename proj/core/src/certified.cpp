#include "mipoly/certified.hpp"

#include <stdexcept>

#include "mipoly/high_precision.hpp"

namespace mipoly {

namespace {

// Bits needed so that 2^-bits < eps.
unsigned bits_for(const Rational& eps) {
  unsigned bits = 8;
  Rational step(1);
  while (step >= eps) {
    step /= Rational(2);
    ++bits;
  }
  return bits + 4;
}

}  // namespace

std::string Certified::str() const {
  if (is_exact()) return value.str();
  return value.str() + " +/- " + radius.str();
}

Certified operator*(const Certified& lhs, const Certified& rhs) {
  return {lhs.value * rhs.value, abs(lhs.value) * rhs.radius + abs(rhs.value) * lhs.radius + lhs.radius * rhs.radius};
}

Certified operator*(const Rational& lhs, const Certified& rhs) { return {lhs * rhs.value, abs(lhs) * rhs.radius}; }

Certified inverse(const Certified& x) {
  const Rational mag = abs(x.value);
  if (mag <= x.radius) throw std::domain_error("inverse of an interval containing zero");
  return {inverse(x.value), x.radius / (mag * (mag - x.radius))};
}

Certified q_pochhammer_infinite(const Rational& a, const Rational& q, const Rational& eps) {
  if (abs(q) >= Rational(1)) throw std::domain_error("infinite q-Pochhammer requires |q| < 1");
  if (eps.sign() <= 0) throw std::invalid_argument("infinite q-Pochhammer requires eps > 0");
  const Rational abs_a = abs(a);
  const Rational denom = Rational(1) - abs(q);
  Rational partial(1);
  Rational power = a;         // a q^N
  Rational abs_power = abs_a;  // |a| |q|^N
  for (long n = 0;; ++n) {
    const Rational tail_sum = abs_power / denom;
    if (tail_sum <= Rational(1, 2) && Rational(2) * tail_sum * abs(partial) < eps / Rational(2)) break;
    partial *= Rational(1) - power;
    power *= q;
    abs_power *= abs(q);
    if (n > 100000) throw std::runtime_error("infinite q-Pochhammer failed to converge");
  }
  const Rational truncation = Rational(2) * (abs_power / denom) * abs(partial);
  const Rational rounded = round_dyadic(partial, bits_for(eps));
  return {rounded, truncation + abs(rounded - partial)};
}

Certified certified_power(const Rational& base, const Rational& exponent, const Rational& eps) {
  if (base.sign() <= 0) throw std::domain_error("certified_power requires a positive base");
  if (exponent.is_integer()) return Certified::exact(pow(base, exponent.to_long()));
  const long num = exponent.numerator().get_si();
  const long den = exponent.denominator().get_si();
  const Rational target = pow(base, num);  // compare y^den against base^num
  const unsigned bits = bits_for(eps);
  const HighPrecision approx =
      boost::multiprecision::pow(to_high_precision(base), to_high_precision(exponent));
  const Rational centre = to_rational(approx, bits + 8);
  Rational half_width = eps / Rational(4);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const Rational lo = centre - half_width;
    const Rational hi = centre + half_width;
    if (lo.sign() > 0 && pow(lo, den) <= target && target <= pow(hi, den)) return {centre, half_width};
    half_width *= Rational(2);
  }
  throw std::runtime_error("certified_power: bracket verification failed");
}

}  // namespace mipoly
