#include <vector>

#include "doctest.h"
#include "mipoly/certified.hpp"
#include "mipoly/interpolate.hpp"
#include "mipoly/pochhammer.hpp"
#include "mipoly/rational_function.hpp"
#include "test_support.hpp"

using mipoly::EtaPolynomial;
using mipoly::ParamRationalFunction;
using mipoly::Rational;

namespace {

Rational r(long n, long d = 1) { return {mpz_class(n), mpz_class(d)}; }

EtaPolynomial poly(std::vector<Rational> c) { return EtaPolynomial(std::move(c)); }

}  // namespace

TEST_CASE("rational parse, print and normalisation") {
  CHECK(Rational::parse("6/-4").str() == "-3/2");
  CHECK(Rational::parse(" 10 ").str() == "10");
  CHECK(Rational::parse("-0/5").is_zero());
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(r(1) / r(0), std::domain_error);
  CHECK(mipoly::pow(r(2, 3), -2) == r(9, 4));
  CHECK(mipoly::floor(r(-7, 2)) == -4);
  CHECK(mipoly::ceil(r(-7, 2)) == -3);
}

TEST_CASE("field axioms hold for random rationals") {
  mipoly::testing::RationalSampler s(11);
  for (int i = 0; i < 200; ++i) {
    const Rational a = s.next(), b = s.next(), c = s.next();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("pochhammer") {
  CHECK(mipoly::pochhammer(r(2), 3) == r(24));
  CHECK(mipoly::pochhammer(r(7, 3), 0) == r(1));
  // brute-force product (-2)(-1)(0)(1)
  Rational brute(1);
  for (long j = 0; j < 4; ++j) brute *= r(-2) + r(j);
  CHECK(mipoly::pochhammer(r(-2), 4) == brute);
  CHECK(brute.is_zero());
  CHECK_THROWS(mipoly::pochhammer(r(1), -1));
}

TEST_CASE("finite q-pochhammer") {
  CHECK(mipoly::q_pochhammer(r(1, 2), r(1, 2), 2) == r(3, 8));
  CHECK(mipoly::q_pochhammer(r(5), r(1, 3), 0) == r(1));
  mipoly::testing::RationalSampler s(5);
  for (int i = 0; i < 50; ++i) {
    const Rational a = s.next(), q = s.next();
    for (long k = 0; k < 6; ++k) {
      CHECK(mipoly::q_pochhammer(a, q, k + 1) ==
            mipoly::q_pochhammer(a, q, k) * (r(1) - a * mipoly::pow(q, k)));
    }
  }
}

TEST_CASE("infinite q-pochhammer is certified") {
  const Rational eps = mipoly::decimal_epsilon(20);
  const auto value = mipoly::q_pochhammer_infinite(r(1, 8), r(1, 2), eps);
  CHECK(value.radius < eps);
  const Rational partial70 = mipoly::q_pochhammer(r(1, 8), r(1, 2), 70);
  CHECK(mipoly::abs(value.value - partial70) < eps);
  // the infinite product lies below every finite partial product here
  CHECK(value.lower() < partial70);
  CHECK_THROWS_AS(mipoly::q_pochhammer_infinite(r(1, 8), r(1)), std::domain_error);
  const auto default_eps = mipoly::q_pochhammer_infinite(r(-1, 3), r(1, 3));
  CHECK(default_eps.radius < mipoly::decimal_epsilon(30));
}

TEST_CASE("certified rational powers") {
  const auto exact = mipoly::certified_power(r(1, 2), r(3));
  CHECK(exact.is_exact());
  CHECK(exact.value == r(1, 8));
  const auto irr = mipoly::certified_power(r(2, 3), r(5, 2));
  CHECK(irr.radius < mipoly::decimal_epsilon(30));
  // bracket confirmed independently: lo^2 <= (2/3)^5 <= hi^2
  CHECK(irr.lower() * irr.lower() <= mipoly::pow(r(2, 3), 5));
  CHECK(mipoly::pow(r(2, 3), 5) <= irr.upper() * irr.upper());
}

TEST_CASE("interpolation") {
  using Node = mipoly::InterpolationNode<Rational>;
  CHECK(mipoly::interpolate(std::vector<Node>{{r(0), r(1)}}) == poly({r(1)}));
  CHECK(mipoly::interpolate(std::vector<Node>{{r(0), r(1)}, {r(1), r(0)}}) == poly({r(1), r(-1)}));
  const std::vector<Node> three{{r(0), r(1)}, {r(1), r(1, 2)}, {r(2), r(0)}};
  const auto p = mipoly::interpolate(three);
  for (const auto& node : three) CHECK(p(node.abscissa) == node.value);
  CHECK_THROWS_AS(mipoly::interpolate(std::vector<Node>{}), std::invalid_argument);
  CHECK_THROWS_AS(mipoly::interpolate(std::vector<Node>{{r(1), r(1)}, {r(1), r(2)}}), std::invalid_argument);
}

TEST_CASE("interpolate after evaluate is the identity") {
  mipoly::testing::RationalSampler s(3);
  for (int trial = 0; trial < 40; ++trial) {
    const long deg = s.integer(0, 7);
    std::vector<Rational> c;
    for (long k = 0; k <= deg; ++k) c.push_back(s.next());
    const EtaPolynomial p(c);
    std::vector<mipoly::InterpolationNode<Rational>> nodes;
    Rational x = s.next();
    for (long k = 0; k <= deg; ++k) {
      nodes.push_back({x, p(x)});
      x += s.nonzero(5, 3) * s.nonzero(5, 3) + r(1, 7);  // strictly increasing abscissae
    }
    CHECK(mipoly::interpolate(nodes) == p);
  }
}

TEST_CASE("polynomial division and gcd") {
  const auto a = poly({r(2), r(-3), r(1)});  // (t-1)(t-2)
  const auto b = poly({r(-1), r(1)});         // t-1
  const auto [quo, rem] = a.divmod(b);
  CHECK(quo == poly({r(-2), r(1)}));
  CHECK(rem.is_zero());
  CHECK(mipoly::gcd(a, poly({r(-3), r(1)} )) == poly({r(1)}));
  CHECK(mipoly::coefficient_strings(poly({r(1), r(1, 4)})) == std::vector<std::string>{"1", "1/4"});
  CHECK(EtaPolynomial().degree() == EtaPolynomial::kZeroDegree);
}

TEST_CASE("rational functions and limits") {
  const auto t = ParamRationalFunction::parameter();
  const ParamRationalFunction one(r(1));
  const auto f = (one - t * t) / (one - t);
  CHECK(mipoly::limit_at(f, r(1)) == r(2));
  CHECK(mipoly::limit_at(ParamRationalFunction(r(7, 3)), r(-5)) == r(7, 3));
  const auto g = (t * t - ParamRationalFunction(r(3)) * t + ParamRationalFunction(r(2))) / (t - one);
  CHECK(mipoly::limit_at(g, r(1)) == r(-1));
  CHECK(g.denominator().degree() == 0);  // reduced on construction
  CHECK_THROWS_AS(mipoly::limit_at(one / (t - one), r(1)), mipoly::LimitError);
  CHECK(t / t == one);
  CHECK((t + one) * (t - one) == t * t - one);
}
