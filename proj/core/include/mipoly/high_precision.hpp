#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "mipoly/field.hpp"

namespace mipoly {

/// Binary floating point with about 200 decimal digits, used where the
/// parameters are irrational (a = q^alpha) and exact arithmetic is impossible.
using HighPrecision =
    boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>, boost::multiprecision::et_off>;

HighPrecision to_high_precision(const Rational& r);

/// Nearest rational m / 2^bits with m an integer (round to nearest).
Rational to_rational(const HighPrecision& v, unsigned bits);

template <>
struct FieldTraits<HighPrecision> {
  static constexpr bool exact = false;
  static HighPrecision from_rational(const Rational& r) { return to_high_precision(r); }
  static bool is_zero(const HighPrecision& v) { return v == 0; }
};

}  // namespace mipoly
