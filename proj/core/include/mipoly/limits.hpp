#pragma once

#include <string>
#include <vector>

#include "mipoly/multi_indexed.hpp"
#include "mipoly/rational_function.hpp"

namespace mipoly {

enum class ClassicalKind { laguerre, jacobi };

/// Classical Laguerre L_n^(alpha) or Jacobi P_n^(alpha,beta) with exact
/// coefficients in its own variable.
struct ClassicalPolynomial {
  ClassicalKind kind = ClassicalKind::laguerre;
  Rational alpha;
  Rational beta;
  long degree = 0;
  Polynomial<Rational> coefficients;

  Rational operator()(const Rational& x) const { return coefficients(x); }
};

/// sum_k binom(n+alpha, n-k) (-x)^k / k!, valid for every rational alpha.
ClassicalPolynomial laguerre(const Rational& alpha, long n);
/// sum_s binom(n+alpha, n-s) binom(n+beta, s) ((x-1)/2)^s ((x+1)/2)^(n-s).
ClassicalPolynomial jacobi(const Rational& alpha, const Rational& beta, long n);

/// lim_{c->1} P_{D,n}(eta/(1-c); (alpha+1, c)) as an exact polynomial in eta;
/// empty labels give the base polynomial. Throws LimitError on a pole.
Polynomial<Rational> meixner_limit_exact(const Rational& alpha, const std::vector<long>& labels, long n);
/// lim_{c->1} xi_v(eta/(1-c); (alpha+1, c)).
Polynomial<Rational> meixner_xi_limit_exact(const Rational& alpha, long v);

/// Classical right-hand sides.
Polynomial<Rational> meixner_limit_target(const Rational& alpha, long n);     // L_n(eta)/L_n(0)
Polynomial<Rational> meixner_xi_limit_target(const Rational& alpha, long v);  // L_v(-eta)/L_v(0)

/// Exact c->1 checks: base and deforming polynomials against the classical
/// ratios for n <= n_max, v <= v_max; the listed deletion sets must have a
/// finite limit of degree l_D + n with constant term 1.
Report verify_meixner_limits(const Rational& alpha, long n_max, long v_max,
                             const std::vector<std::vector<long>>& deletion_sets, long n_max_multi);

enum class LimitSubject { polynomial, virtual_polynomial, multi_indexed };

struct QLimitConfig {
  Family family = Family::little_q_jacobi;
  Rational alpha;
  Rational beta;              // little q-Jacobi only
  LimitSubject subject = LimitSubject::polynomial;
  long degree = 0;            // n, or v for the virtual polynomial
  std::vector<long> labels;   // multi_indexed only
  int k_min = 4;
  int k_max = 14;
};

struct QLimitResult {
  QLimitConfig config;
  std::vector<double> errors;        // max |f_k - target| over the sample points (classical subjects)
  std::vector<double> differences;   // max |f_k - f_{k-1}|, starting at k_min+1
  std::vector<double> ratios;        // differences[i]/differences[i-1]
  double raw_error = 0;              // at k_max
  double extrapolated_error = 0;     // |2 f_kmax - f_{kmax-1} - target|
  bool passed = false;
  std::string detail;
};

/// Numeric q -> 1 limit at q_k = 1 - 2^-k in 200-bit arithmetic with a = q^alpha,
/// b = q^beta. Classical subjects pass when the first-order extrapolated value
/// at k_max is within `tolerance` of the classical ratio and the last three
/// difference ratios lie in [0.4, 0.6]; multi-indexed subjects pass on the
/// ratio condition alone (the classical multi-indexed targets are not built).
QLimitResult q_limit_numeric(const QLimitConfig& config, double tolerance = 1e-6);

/// Exact q -> 1 limit over Q(q) for integer alpha (and beta) at a rational
/// sample point eta, against the classical ratio.
Rational q_limit_exact(Family family, long alpha, long beta, LimitSubject subject, long degree, const Rational& eta);
Rational q_limit_target(Family family, const Rational& alpha, const Rational& beta, LimitSubject subject, long degree,
                        const Rational& eta);

}  // namespace mipoly
