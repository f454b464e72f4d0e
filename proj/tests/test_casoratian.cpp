#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "mipoly/casoratian.hpp"
#include "mipoly/polynomial.hpp"

using namespace mipoly;

namespace {

using Grid = GridFunction<Rational>;

// Leibniz expansion over all permutations.
Rational leibniz(const Matrix<Rational>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Rational term(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Grid poly_grid(std::vector<long> coeffs) {
  std::vector<Rational> c(coeffs.begin(), coeffs.end());
  Polynomial<Rational> p(std::move(c));
  return [p](long x) { return p(Rational(x)); };
}

std::vector<Grid> random_grids(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> coef(-5, 5);
  std::vector<Grid> out;
  for (int k = 0; k < n; ++k) {
    std::vector<long> c(static_cast<std::size_t>(n + 1));
    for (auto& v : c) v = coef(rng);
    out.push_back(poly_grid(c));
  }
  return out;
}

}  // namespace

TEST_CASE("small casoratians") {
  CHECK(casoratian<Rational>({}, 7) == Rational(1));
  const Grid f = poly_grid({3, 1});
  CHECK(casoratian<Rational>({f}, 4) == Rational(7));
  const Grid one = poly_grid({1});
  const Grid id = poly_grid({0, 1});
  for (long x = -5; x <= 5; ++x) CHECK(casoratian<Rational>({one, id}, x) == Rational(1));
}

TEST_CASE("determinant agrees with permutation expansion") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(-6, 6);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      Matrix<Rational> m(n, std::vector<Rational>(n));
      for (auto& row : m) {
        for (auto& v : row) v = Rational(entry(rng)) / Rational(1 + (entry(rng) + 6) % 3);
      }
      // force zero pivots now and then
      if (trial % 3 == 0) m[0][0] = Rational(0);
      CHECK(determinant(m) == leibniz(m));
      CHECK(detail::bareiss_det(m) == leibniz(m));
    }
  }
}

TEST_CASE("antisymmetry, multilinearity and dependence") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      auto fs = random_grids(rng, n);
      auto swapped = fs;
      std::swap(swapped[0], swapped[static_cast<std::size_t>(n - 1)]);
      const Grid extra = random_grids(rng, 1)[0];
      auto summed = fs;
      summed[1] = [a = fs[1], extra](long x) { return Rational(3) * a(x) + extra(x); };
      auto replaced = fs;
      replaced[1] = extra;
      auto dependent = fs;
      dependent[0] = [fs](long x) { return Rational(2) * fs[1](x) - fs[static_cast<std::size_t>(fs.size() - 1)](x); };
      for (long x = -4; x <= 4; ++x) {
        CHECK(casoratian(swapped, x) == -casoratian(fs, x));
        CHECK(casoratian(summed, x) == Rational(3) * casoratian(fs, x) + casoratian(replaced, x));
        CHECK(casoratian(dependent, x).is_zero());
      }
    }
  }
}

TEST_CASE("identity examples") {
  const Grid one = poly_grid({1});
  std::mt19937_64 rng(3);
  const auto fs = random_grids(rng, 3);
  CHECK(verify_gauge_identity(fs, one, -5, 5).passed);
  CHECK(verify_two_column_identity({}, fs[0], fs[1], -5, 5).passed);
  CHECK(verify_complementary_minor_identity(fs, -5, 5).passed);
  // an independent determinant evaluation of the gauge identity for n=3
  const Grid g = poly_grid({1, 2});
  for (long x = -5; x <= 5; ++x) {
    Matrix<Rational> m(3, std::vector<Rational>(3));
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) m[j][k] = g(x + static_cast<long>(j)) * fs[k](x + static_cast<long>(j));
    }
    CHECK(leibniz(m) == g(x) * g(x + 1) * g(x + 2) * casoratian(fs, x));
  }
}

TEST_CASE("randomised identities") {
  const Report report = verify_casoratian_identities(20240101, 100, 4, -5, 5);
  CHECK(report.passed);
  CHECK(report.checks == 3 * 100 * 11);
}
