#include "mipoly/casoratian.hpp"

#include <random>
#include <string>

#include "mipoly/polynomial.hpp"

namespace mipoly {

namespace {

using Grid = GridFunction<Rational>;

std::string where(int n, long x) { return "n=" + std::to_string(n) + ",x=" + std::to_string(x); }

std::string mismatch_text(std::string_view id, int n, long x, const Rational& lhs, const Rational& rhs) {
  return std::string(id) + " at " + where(n, x) + ": lhs=" + lhs.str() + " rhs=" + rhs.str();
}

std::vector<Grid> with(std::vector<Grid> fs, std::initializer_list<Grid> extra) {
  for (const auto& e : extra) fs.push_back(e);
  return fs;
}

Grid from_polynomial(Polynomial<Rational> p) {
  return [p = std::move(p)](long x) { return p(Rational(x)); };
}

Grid random_polynomial(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> degree(0, 6);
  std::uniform_int_distribution<long> coefficient(-9, 9);
  std::vector<Rational> c(static_cast<std::size_t>(degree(rng)) + 1);
  for (auto& v : c) v = Rational(coefficient(rng));
  return from_polynomial(Polynomial<Rational>(std::move(c)));
}

}  // namespace

Report verify_gauge_identity(const std::vector<Grid>& fs, const Grid& g, long x_lo, long x_hi) {
  Report report("gauge");
  const int n = static_cast<int>(fs.size());
  std::vector<Grid> gauged;
  for (const auto& f : fs) gauged.push_back([f, g](long x) { return g(x) * f(x); });
  for (long x = x_lo; x <= x_hi; ++x) {
    const Rational lhs = casoratian(gauged, x);
    Rational rhs = casoratian(fs, x);
    for (long k = 0; k < n; ++k) rhs *= g(x + k);
    report.expect(lhs == rhs, [&] { return mismatch_text("gauge", n, x, lhs, rhs); });
  }
  return report;
}

Report verify_two_column_identity(const std::vector<Grid>& fs, const Grid& g, const Grid& h, long x_lo, long x_hi) {
  Report report("two_column");
  const int n = static_cast<int>(fs.size());
  const Grid wg = [fs, g](long x) { return casoratian(with(fs, {g}), x); };
  const Grid wh = [fs, h](long x) { return casoratian(with(fs, {h}), x); };
  for (long x = x_lo; x <= x_hi; ++x) {
    const Rational lhs = casoratian<Rational>({wg, wh}, x);
    const Rational rhs = casoratian(fs, x + 1) * casoratian(with(fs, {g, h}), x);
    report.expect(lhs == rhs, [&] { return mismatch_text("two_column", n, x, lhs, rhs); });
  }
  return report;
}

Report verify_complementary_minor_identity(const std::vector<Grid>& fs, long x_lo, long x_hi) {
  Report report("complementary_minor");
  const int n = static_cast<int>(fs.size());
  std::vector<Grid> minors;
  for (int j = 0; j < n; ++j) {
    std::vector<Grid> rest;
    for (int k = 0; k < n; ++k) {
      if (k != j) rest.push_back(fs[static_cast<std::size_t>(k)]);
    }
    minors.push_back([rest](long x) { return casoratian(rest, x); });
  }
  const bool negative = (n * (n - 1) / 2) % 2 != 0;
  for (long x = x_lo; x <= x_hi; ++x) {
    const Rational lhs = casoratian(minors, x);
    Rational rhs(negative ? -1 : 1);
    for (long k = 0; k + 2 <= n; ++k) rhs *= casoratian(fs, x + k);
    report.expect(lhs == rhs, [&] { return mismatch_text("complementary_minor", n, x, lhs, rhs); });
  }
  return report;
}

Report verify_casoratian_identities(std::uint64_t seed, int instances, int n_max, long x_lo, long x_hi) {
  Report report("casoratian_identities");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(0, n_max);
  for (int i = 0; i < instances; ++i) {
    std::vector<Grid> fs;
    for (int k = size(rng); k > 0; --k) fs.push_back(random_polynomial(rng));
    report.absorb(verify_gauge_identity(fs, random_polynomial(rng), x_lo, x_hi));
  }
  for (int i = 0; i < instances; ++i) {
    std::vector<Grid> fs;
    for (int k = size(rng); k > 0; --k) fs.push_back(random_polynomial(rng));
    const Grid g = random_polynomial(rng);
    report.absorb(verify_two_column_identity(fs, g, random_polynomial(rng), x_lo, x_hi));
  }
  for (int i = 0; i < instances; ++i) {
    std::vector<Grid> fs;
    for (int k = size(rng); k > 0; --k) fs.push_back(random_polynomial(rng));
    report.absorb(verify_complementary_minor_identity(fs, x_lo, x_hi));
  }
  return report;
}

}  // namespace mipoly
