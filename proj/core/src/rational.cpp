#include "mipoly/rational.hpp"

#include <cctype>
#include <climits>
#include <ostream>
#include <stdexcept>

namespace mipoly {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return mpz_class(buf, 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num_part = text.substr(0, slash);
  if (!is_integer_literal(num_part)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num_part), mpz_class(1));
  const auto den_part = text.substr(slash + 1);
  if (!is_integer_literal(den_part)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num_part), parse_integer(den_part));
}

long Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) {
    throw std::domain_error("rational " + str() + " is not a machine integer");
  }
  return value_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const int c = cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational inverse(const Rational& r) { return Rational(1) / r; }

Rational pow(const Rational& r, long e) {
  if (e < 0) return pow(inverse(r), -e);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), r.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

mpz_class ceil(const Rational& r) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return out;
}

mpz_class floor(const Rational& r) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return out;
}

Rational round_dyadic(const Rational& r, unsigned bits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  const Rational scaled = abs(r) * Rational(scale, mpz_class(1));
  const mpz_class rounded = floor(scaled + Rational(1, 2));
  const Rational magnitude(rounded, scale);
  return r.sign() < 0 ? -magnitude : magnitude;
}

Rational decimal_epsilon(unsigned digits) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, digits);
  return Rational(mpz_class(1), den);
}

}  // namespace mipoly
