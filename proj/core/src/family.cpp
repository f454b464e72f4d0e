#include <sstream>

#include "mipoly/family.hpp"

namespace mipoly {

std::string_view family_tag(Family f) {
  switch (f) {
    case Family::meixner:
      return "M";
    case Family::little_q_jacobi:
      return "lqJ";
    case Family::little_q_laguerre:
      return "lqL";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "M" || text == "meixner") return Family::meixner;
  if (text == "lqJ" || text == "little_q_jacobi") return Family::little_q_jacobi;
  if (text == "lqL" || text == "little_q_laguerre") return Family::little_q_laguerre;
  throw ParameterError("unknown family '" + std::string(text) + "' (expected M, lqJ or lqL)");
}

void validate(const FamilyParams& p, long special_bound) {
  const Rational zero(0), one(1);
  if (!p.is_q()) {
    if (p.beta <= zero) throw ParameterError("meixner requires beta>0");
    if (p.c <= zero || p.c >= one) throw ParameterError("meixner requires 0<c<1");
    return;
  }
  const std::string name(p.family == Family::little_q_jacobi ? "little q-jacobi" : "little q-laguerre");
  if (p.q <= zero || p.q >= one) throw ParameterError(name + " requires 0<q<1");
  const Rational q_inv = inverse(p.q);
  if (p.a <= zero || p.a >= q_inv) throw ParameterError(name + " requires 0<a<1/q");
  if (p.family == Family::little_q_laguerre) {
    if (!p.b.is_zero()) throw ParameterError("little q-laguerre has no parameter b");
    return;
  }
  if (p.b >= q_inv) throw ParameterError(name + " requires b<1/q");
  Rational bq = p.b * p.q;  // b q^{m+1}
  for (long m = 0; m <= special_bound; ++m) {
    if (p.a == bq) {
      throw ParameterError(name + " excludes the special configuration a=b*q^(m+1), here m=" + std::to_string(m));
    }
    bq *= p.q;
  }
}

FamilyParams make_meixner(const Rational& beta, const Rational& c) {
  FamilyParams p;
  p.family = Family::meixner;
  p.beta = beta;
  p.c = c;
  validate(p);
  return p;
}

FamilyParams make_little_q_jacobi(const Rational& a, const Rational& b, const Rational& q, long special_bound) {
  FamilyParams p;
  p.family = Family::little_q_jacobi;
  p.a = a;
  p.b = b;
  p.q = q;
  validate(p, special_bound);
  return p;
}

FamilyParams make_little_q_laguerre(const Rational& a, const Rational& q) {
  FamilyParams p;
  p.family = Family::little_q_laguerre;
  p.a = a;
  p.b = Rational(0);
  p.q = q;
  validate(p);
  return p;
}

std::string describe(const FamilyParams& p) {
  std::ostringstream os;
  os << family_tag(p.family) << "(";
  switch (p.family) {
    case Family::meixner:
      os << "beta=" << p.beta << ",c=" << p.c;
      break;
    case Family::little_q_jacobi:
      os << "a=" << p.a << ",b=" << p.b << ",q=" << p.q;
      break;
    case Family::little_q_laguerre:
      os << "a=" << p.a << ",q=" << p.q;
      break;
  }
  os << ")";
  return os.str();
}

}  // namespace mipoly
