#include "mipoly/high_precision.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace mipoly {

HighPrecision to_high_precision(const Rational& r) {
  return HighPrecision(r.numerator().get_str()) / HighPrecision(r.denominator().get_str());
}

Rational to_rational(const HighPrecision& v, unsigned bits) {
  const HighPrecision scaled = boost::multiprecision::round(boost::multiprecision::ldexp(v, static_cast<int>(bits)));
  const auto as_int = static_cast<boost::multiprecision::cpp_int>(scaled);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  return {mpz_class(as_int.str()), den};
}

}  // namespace mipoly
