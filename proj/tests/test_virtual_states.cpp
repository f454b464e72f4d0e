#include "doctest.h"
#include "mipoly/virtual_states.hpp"

using namespace mipoly;

namespace {

Rational r(long n, long d = 1) { return {mpz_class(n), mpz_class(d)}; }

std::vector<FamilyParams> matrix() {
  return {make_meixner(r(1), r(1, 2)), make_meixner(r(5, 2), r(1, 3)),
          make_little_q_jacobi(r(1, 32), r(1, 3), r(1, 2)), make_little_q_jacobi(r(1, 32), r(-1, 2), r(1, 2)),
          make_little_q_laguerre(r(1, 32), r(1, 2)), make_little_q_jacobi(r(1, 16), r(1, 3), r(1, 2)),
          make_little_q_laguerre(r(1, 8), r(1, 2))};
}

long vcap(const FamilyParams& p) { return p.is_q() ? 64 : 8; }

}  // namespace

TEST_CASE("twist is an involution") {
  const auto m = make_meixner(r(1), r(1, 2));
  CHECK(twisted(m).c == r(2));
  CHECK(twisted(m).beta == r(1));
  const auto j = make_little_q_jacobi(r(1, 4), r(1, 3), r(1, 2));
  CHECK(twisted(j).a == r(4));
  CHECK(twisted(j).b == r(1, 3));
  for (const auto& p : matrix()) {
    const auto back = twisted(twisted(p));
    CHECK(back.beta == p.beta);
    CHECK(back.c == p.c);
    CHECK(back.a == p.a);
    CHECK(back.b == p.b);
  }
}

TEST_CASE("alpha constants") {
  const auto m = alpha_constants(make_meixner(r(1), r(1, 2)));
  CHECK(m.alpha == r(1, 2));
  CHECK(m.alpha_prime == r(-1, 2));
  const auto l = alpha_constants(make_little_q_laguerre(r(1, 8), r(1, 2)));
  CHECK(l.alpha == r(1, 8));
  CHECK(l.alpha_prime == r(-7, 8));
  const auto j = alpha_constants(make_little_q_jacobi(r(1, 4), r(1, 3), r(1, 2)));
  CHECK(j.alpha_prime == -(r(3, 4) * r(5, 6)));
  CHECK(j.alpha_prime == r(-5, 8));
}

TEST_CASE("linear relation") {
  const auto m = make_meixner(r(1), r(1, 2));
  // alpha^2 B'(5) D'(6) = (1/4)(2*6)(6) = 18 = B(5) D(6)
  CHECK(r(1, 4) * twisted_B(m, 5) * potential_D(m, 6) == r(18));
  CHECK(potential_B(m, 5) * potential_D(m, 6) == r(18));
  for (const auto& p : matrix()) {
    CHECK(alpha(p) * twisted_B(p, 0) + alpha_prime(p) == potential_B(p, 0));
    CHECK(verify_linear_relation(p, 40).passed);
  }
}

TEST_CASE("virtual energies and index sets") {
  const auto m = make_meixner(r(1), r(1, 2));
  CHECK(virtual_energy(m, 1) == r(-1));
  const auto l = make_little_q_laguerre(r(1, 8), r(1, 2));
  CHECK(virtual_energy(l, 2) == r(-1, 2));
  CHECK(index_set(l, 10).labels == std::vector<long>{1, 2});
  CHECK(index_set(m, 5).labels == std::vector<long>{1, 2, 3, 4, 5});
  CHECK(index_set(make_little_q_jacobi(r(1, 16), r(1, 3), r(1, 2)), 10).labels == std::vector<long>{1, 2, 3});
  const auto empty = index_set(make_little_q_laguerre(r(3, 4), r(1, 2)), 10);
  CHECK(empty.labels.empty());
  CHECK_FALSE(empty.warning.empty());
  for (const auto& p : matrix()) {
    CHECK(virtual_energy(p, 0) == alpha_prime(p));
    CHECK(verify_virtual_energies(p, vcap(p)).passed);
  }
}

TEST_CASE("virtual polynomials") {
  const auto m = make_meixner(r(1), r(1, 2));
  CHECK(xi_poly(m, 0) == EtaPolynomial({r(1)}));
  CHECK(xi_poly(m, 1) == EtaPolynomial({r(1), r(1, 2)}));
  for (long v = 1; v <= 8; ++v) {
    for (long x = 0; x <= 60; ++x) CHECK(xi_value(m, v, x) > r(0));
  }
}

TEST_CASE("positivity certificates") {
  for (const auto& p : matrix()) {
    for (long v : index_set(p, vcap(p)).labels) {
      CHECK(positivity_certificate(p, v, 100).passed);
      CHECK(verify_twisted_equation(p, v, 30).passed);
      CHECK(verify_infinite_norm(p, v, 60).passed);
    }
    CHECK(verify_nu_relation(p, 30).passed);
  }
  // b = 0 in the little q-Jacobi series is the little q-Laguerre series
  const auto jac = make_little_q_jacobi(r(1, 16), r(0), r(1, 2));
  const auto lag = make_little_q_laguerre(r(1, 16), r(1, 2));
  for (long v = 1; v <= 3; ++v) {
    for (long x = 0; x <= 12; ++x) CHECK(xi_positive_series(jac, v, x) == xi_positive_series(lag, v, x));
  }
}

TEST_CASE("nu") {
  const auto m = make_meixner(r(1), r(1, 2));
  CHECK(nu(m, 0) == r(1));
  CHECK(nu(m, 3) == r(1, 8));
}
