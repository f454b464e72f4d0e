#include <cmath>

#include "doctest.h"
#include "mipoly/limits.hpp"

using namespace mipoly;

namespace {

Rational r(long n, long d = 1) { return {mpz_class(n), mpz_class(d)}; }

// Three-term recurrences, independent of the closed-form series.
Rational laguerre_recurrence(const Rational& alpha, long n, const Rational& x) {
  Rational prev(0), cur(1);
  for (long k = 0; k < n; ++k) {
    const Rational next = ((r(2 * k + 1) + alpha - x) * cur - (r(k) + alpha) * prev) / r(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

Rational jacobi_recurrence(const Rational& a, const Rational& b, long n, const Rational& x) {
  if (n == 0) return r(1);
  Rational prev(1);
  Rational cur = (a + r(1)) + (a + b + r(2)) * (x - r(1)) / r(2);
  for (long k = 2; k <= n; ++k) {
    const Rational s = r(2 * k) + a + b;
    const Rational c1 = r(2 * k) * (r(k) + a + b) * (s - r(2));
    const Rational c2 = (s - r(1)) * (s * (s - r(2)) * x + a * a - b * b);
    const Rational c3 = r(2) * (r(k - 1) + a) * (r(k - 1) + b) * s;
    const Rational next = (c2 * cur - c3 * prev) / c1;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<Rational> alphas() { return {r(0), r(1), r(1, 2), r(-1, 3), r(7, 2)}; }

}  // namespace

TEST_CASE("laguerre agrees with its recurrence and normalization") {
  for (const auto& alpha : alphas()) {
    for (long n = 0; n <= 6; ++n) {
      const auto l = laguerre(alpha, n);
      CHECK(l.coefficients.degree() == n);
      CHECK(l(r(0)) == pochhammer(alpha + r(1), n) / pochhammer(r(1), n));
      for (const auto& x : {r(-2), r(1, 3), r(5, 2), r(7)}) CHECK(l(x) == laguerre_recurrence(alpha, n, x));
    }
  }
  CHECK(laguerre(r(0), 0).coefficients == Polynomial<Rational>::constant(r(1)));
  CHECK(laguerre(r(0), 1).coefficients == Polynomial<Rational>::linear(r(-1), r(1)));
  CHECK(laguerre(r(-2), 1)(r(3)) == r(-4));
}

TEST_CASE("jacobi agrees with its recurrence and normalization") {
  for (const auto& alpha : alphas()) {
    for (const auto& beta : {r(0), r(1, 3), r(-1, 2), r(2)}) {
      for (long n = 0; n <= 5; ++n) {
        const auto j = jacobi(alpha, beta, n);
        const Rational sign = n % 2 ? r(-1) : r(1);
        CHECK(j(r(-1)) == sign * pochhammer(beta + r(1), n) / pochhammer(r(1), n));
        CHECK(j(r(1)) == pochhammer(alpha + r(1), n) / pochhammer(r(1), n));
        for (const auto& x : {r(-1, 2), r(1, 5), r(3)}) CHECK(j(x) == jacobi_recurrence(alpha, beta, n, x));
      }
      CHECK(jacobi(alpha, beta, 1)(r(-1)) == -(beta + r(1)));
    }
  }
  CHECK(jacobi(r(3), r(1), 0).coefficients == Polynomial<Rational>::constant(r(1)));
}

TEST_CASE("meixner c->1 base and deforming limits are classical") {
  CHECK(meixner_limit_exact(r(0), {}, 1) == Polynomial<Rational>::linear(r(-1), r(1)));
  CHECK(meixner_xi_limit_exact(r(0), 1) == Polynomial<Rational>::linear(r(1), r(1)));
  for (const auto& alpha : alphas()) {
    for (long n = 0; n <= 4; ++n) CHECK(meixner_limit_exact(alpha, {}, n) == meixner_limit_target(alpha, n));
    for (long v = 1; v <= 3; ++v) CHECK(meixner_xi_limit_exact(alpha, v) == meixner_xi_limit_target(alpha, v));
  }
  // targets re-derived from the recurrence
  for (long n = 1; n <= 4; ++n) {
    const auto t = meixner_limit_target(r(1, 2), n);
    for (const auto& x : {r(1, 3), r(4)}) {
      CHECK(t(x) == laguerre_recurrence(r(1, 2), n, x) / laguerre_recurrence(r(1, 2), n, r(0)));
    }
  }
}

TEST_CASE("meixner c->1 multi-indexed limits exist") {
  const std::vector<std::vector<long>> sets = {{1}, {2}, {1, 2}, {1, 3}, {2, 4}};
  const auto report = verify_meixner_limits(r(1), 4, 3, sets, 2);
  CHECK_MESSAGE(report.passed, (report.witnesses.empty() ? "" : report.witnesses.front()));
  CHECK(report.checks == 5 + 3 + 2 * 5 * 3);
  for (const auto& d : sets) {
    const auto lim = meixner_limit_exact(r(5, 2), d, 0);
    CHECK(lim.degree() == ell_of(d));
    CHECK(lim.coefficient(0) == r(1));
  }
  CHECK(meixner_limit_exact(r(1, 2), {1, 2, 3}, 1).degree() == ell_of(std::vector<long>{1, 2, 3}) + 1);
}

TEST_CASE("q->1 limits exact in q for integer alpha") {
  for (const auto& eta : {r(1, 5), r(1, 2), r(3, 4)}) {
    for (long n = 0; n <= 3; ++n) {
      CHECK(q_limit_exact(Family::little_q_jacobi, 2, 1, LimitSubject::polynomial, n, eta) ==
            q_limit_target(Family::little_q_jacobi, r(2), r(1), LimitSubject::polynomial, n, eta));
      CHECK(q_limit_exact(Family::little_q_laguerre, 1, 0, LimitSubject::polynomial, n, eta) ==
            q_limit_target(Family::little_q_laguerre, r(1), r(0), LimitSubject::polynomial, n, eta));
    }
    for (long v = 1; v <= 2; ++v) {
      CHECK(q_limit_exact(Family::little_q_jacobi, 3, 1, LimitSubject::virtual_polynomial, v, eta) ==
            q_limit_target(Family::little_q_jacobi, r(3), r(1), LimitSubject::virtual_polynomial, v, eta));
      CHECK(q_limit_exact(Family::little_q_laguerre, 3, 0, LimitSubject::virtual_polynomial, v, eta) ==
            q_limit_target(Family::little_q_laguerre, r(3), r(0), LimitSubject::virtual_polynomial, v, eta));
    }
  }
  CHECK(q_limit_exact(Family::little_q_laguerre, 1, 0, LimitSubject::polynomial, 1, r(1, 2)) == r(3, 4));
  CHECK(q_limit_target(Family::little_q_laguerre, r(2), r(0), LimitSubject::virtual_polynomial, 1, r(1, 2)) == r(3, 2));
}

TEST_CASE("q->1 numeric limits converge at first order") {
  std::vector<QLimitConfig> configs;
  for (long n = 0; n <= 3; ++n) {
    configs.push_back({Family::little_q_jacobi, r(1, 2), r(1, 3), LimitSubject::polynomial, n, {}});
    configs.push_back({Family::little_q_laguerre, r(1), r(0), LimitSubject::polynomial, n, {}});
  }
  for (long v = 1; v <= 2; ++v) {
    configs.push_back({Family::little_q_jacobi, r(7, 2), r(1, 3), LimitSubject::virtual_polynomial, v, {}});
    configs.push_back({Family::little_q_laguerre, r(7, 2), r(0), LimitSubject::virtual_polynomial, v, {}});
  }
  configs.push_back({Family::little_q_laguerre, r(2), r(0), LimitSubject::virtual_polynomial, 1, {}});
  for (const auto& c : configs) {
    const auto res = q_limit_numeric(c);
    CAPTURE(c.degree);
    CAPTURE(res.detail);
    CHECK(res.passed);
    CHECK(res.errors.size() == 11);
    if (c.degree > 0) {
      CHECK(res.errors.back() < res.errors.front());
      CHECK(res.extrapolated_error < res.raw_error);
    } else {
      CHECK(res.raw_error < 1e-50);
    }
  }
}

TEST_CASE("q->1 multi-indexed limits stabilize") {
  const std::vector<QLimitConfig> configs = {
      {Family::little_q_jacobi, r(7, 2), r(1, 3), LimitSubject::multi_indexed, 1, {1}},
      {Family::little_q_jacobi, r(7, 2), r(1, 3), LimitSubject::multi_indexed, 2, {1, 2}},
      {Family::little_q_laguerre, r(7, 2), r(0), LimitSubject::multi_indexed, 1, {1, 3}},
  };
  for (const auto& c : configs) {
    const auto res = q_limit_numeric(c);
    CAPTURE(res.detail);
    CHECK(res.passed);
    CHECK(res.differences.back() < 1e-2);
  }
}
