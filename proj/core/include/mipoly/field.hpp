#pragma once

#include <concepts>
#include <stdexcept>

#include "mipoly/rational.hpp"

namespace mipoly {

/// Customisation point: how a scalar field embeds the rationals and whether
/// its arithmetic is exact. Specialised for Rational, ParamRationalFunction
/// and HighPrecision.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool exact = true;
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& r) { return r.is_zero(); }
};

template <class F>
concept Field = requires(const F& a, const F& b, const Rational& r) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { FieldTraits<F>::from_rational(r) } -> std::convertible_to<F>;
  { FieldTraits<F>::is_zero(a) } -> std::convertible_to<bool>;
};

template <Field F>
F lift(const Rational& r) {
  return FieldTraits<F>::from_rational(r);
}

template <Field F>
F lift(long n) {
  return FieldTraits<F>::from_rational(Rational(n));
}

template <Field F>
bool is_zero(const F& value) {
  return FieldTraits<F>::is_zero(value);
}

/// base^e by repeated squaring; negative e inverts the base.
template <Field F>
F ipow(const F& base, long e) {
  if (e < 0) return ipow(F(lift<F>(1) / base), -e);
  F result = lift<F>(1);
  F square = base;
  while (e > 0) {
    if (e & 1) result = result * square;
    e >>= 1;
    if (e > 0) square = square * square;
  }
  return result;
}

}  // namespace mipoly
