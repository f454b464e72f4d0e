#include "mipoly/rational_function.hpp"

#include <ostream>
#include <sstream>

namespace mipoly {

namespace {

std::string poly_str(const Polynomial<Rational>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    const Rational& c = p.coefficients()[k];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (k >= 1) os << "*t";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

}  // namespace

ParamRationalFunction::ParamRationalFunction(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(Rational(1));
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  const Rational lead = den_.leading();
  if (lead != Rational(1)) {
    num_ = inverse(lead) * num_;
    den_ = inverse(lead) * den_;
  }
}

ParamRationalFunction ParamRationalFunction::parameter() {
  return {Poly::monomial(Rational(1), 1), Poly::constant(Rational(1))};
}

Rational ParamRationalFunction::evaluate(const Rational& t0) const {
  const Rational d = den_(t0);
  if (d.is_zero()) throw LimitError("limit does not exist (pole at t = " + t0.str() + ")");
  return num_(t0) / d;
}

std::string ParamRationalFunction::str() const {
  if (den_.degree() == 0) return poly_str(num_);
  return "[" + poly_str(num_) + "] / [" + poly_str(den_) + "]";
}

ParamRationalFunction ParamRationalFunction::operator-() const {
  ParamRationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

ParamRationalFunction operator+(const ParamRationalFunction& lhs, const ParamRationalFunction& rhs) {
  if (lhs.den_ == rhs.den_) return {lhs.num_ + rhs.num_, lhs.den_};
  return {lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_};
}

ParamRationalFunction operator-(const ParamRationalFunction& lhs, const ParamRationalFunction& rhs) {
  return lhs + (-rhs);
}

ParamRationalFunction operator*(const ParamRationalFunction& lhs, const ParamRationalFunction& rhs) {
  return {lhs.num_ * rhs.num_, lhs.den_ * rhs.den_};
}

ParamRationalFunction operator/(const ParamRationalFunction& lhs, const ParamRationalFunction& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational function division by zero");
  return {lhs.num_ * rhs.den_, lhs.den_ * rhs.num_};
}

std::ostream& operator<<(std::ostream& os, const ParamRationalFunction& f) { return os << f.str(); }

Rational limit_at(const ParamRationalFunction& f, const Rational& t0) { return f.evaluate(t0); }

}  // namespace mipoly
