#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mipoly/field.hpp"

namespace mipoly {

/// Dense univariate polynomial over a field, constant term first.
///
/// Trailing zero coefficients are always trimmed, so degree() is the index of
/// the last stored coefficient. The zero polynomial has no coefficients and
/// reports kZeroDegree.
template <Field F>
class Polynomial {
 public:
  static constexpr int kZeroDegree = INT_MIN;

  Polynomial() = default;
  explicit Polynomial(std::vector<F> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  static Polynomial constant(const F& value) { return Polynomial(std::vector<F>{value}); }
  /// coefficient * var^power
  static Polynomial monomial(const F& coefficient, std::size_t power) {
    std::vector<F> c(power + 1, lift<F>(0));
    c[power] = coefficient;
    return Polynomial(std::move(c));
  }
  /// slope * var + offset
  static Polynomial linear(const F& slope, const F& offset) { return Polynomial(std::vector<F>{offset, slope}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<F>& coefficients() const { return coeffs_; }
  F coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : lift<F>(0); }
  F leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  /// Horner evaluation.
  F operator()(const F& at) const {
    F acc = lift<F>(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// p(slope * var + offset)
  Polynomial compose_linear(const F& slope, const F& offset) const {
    Polynomial result;
    const Polynomial inner = linear(slope, offset);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) result = result * inner + constant(*it);
    return result;
  }

  Polynomial operator-() const {
    std::vector<F> c;
    c.reserve(coeffs_.size());
    for (const auto& v : coeffs_) c.push_back(-v);
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
    std::vector<F> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), lift<F>(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) c[i] = lhs.coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] = c[i] + rhs.coeffs_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) { return lhs + (-rhs); }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<F> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, lift<F>(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] = c[i + j] + lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const F& scalar, const Polynomial& p) {
    std::vector<F> c;
    c.reserve(p.coeffs_.size());
    for (const auto& v : p.coeffs_) c.push_back(scalar * v);
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  /// Euclidean division: returns (quotient, remainder).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial quotient;
    Polynomial remainder = *this;
    const F lead = divisor.leading();
    while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
      const auto shift = static_cast<std::size_t>(remainder.degree() - divisor.degree());
      const F factor = remainder.leading() / lead;
      const Polynomial term = monomial(factor, shift);
      quotient = quotient + term;
      std::vector<F> c = remainder.coeffs_;
      for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i) c[i + shift] = c[i + shift] - factor * divisor.coeffs_[i];
      c.pop_back();  // cancelled leading term
      remainder = Polynomial(std::move(c));
    }
    return {quotient, remainder};
  }

  /// Scaled so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const {
    if (is_zero()) return {};
    return (lift<F>(1) / leading()) * (*this);
  }

 private:
  void trim() {
    while (!coeffs_.empty() && mipoly::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

/// Monic greatest common divisor (zero if both inputs are zero).
template <Field F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Polynomial in the sinusoidal coordinate eta with exact coefficients.
using EtaPolynomial = Polynomial<Rational>;

/// Coefficients as exact "p/q" strings, constant term first.
std::vector<std::string> coefficient_strings(const EtaPolynomial& p);

}  // namespace mipoly
