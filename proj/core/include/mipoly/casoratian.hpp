#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "mipoly/field.hpp"
#include "mipoly/report.hpp"

namespace mipoly {

/// Deterministic map from a lattice point to a field value.
template <Field F>
using GridFunction = std::function<F(long)>;

template <Field F>
using Matrix = std::vector<std::vector<F>>;

namespace detail {

template <Field F>
F cofactor_det(const Matrix<F>& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.size();
  if (row == n) return lift<F>(1);
  F acc = lift<F>(0);
  bool negative = false;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const std::size_t col = cols[i];
    if (!is_zero(m[row][col])) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i));
      const F minor = cofactor_det(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(i), col);
      const F term = m[row][col] * minor;
      acc = negative ? F(acc - term) : F(acc + term);
    }
    negative = !negative;
  }
  return acc;
}

/// Bareiss fraction-free elimination with row pivoting.
template <Field F>
F bareiss_det(Matrix<F> m) {
  const std::size_t n = m.size();
  F previous = lift<F>(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t pivot = k + 1;
      while (pivot < n && is_zero(m[pivot][k])) ++pivot;
      if (pivot == n) return lift<F>(0);
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
    }
    previous = m[k][k];
  }
  const F det = m[n - 1][n - 1];
  return negate ? F(-det) : det;
}

}  // namespace detail

/// Exact determinant: cofactor expansion below 5x5, Bareiss above.
template <Field F>
F determinant(const Matrix<F>& m) {
  const std::size_t n = m.size();
  if (n == 0) return lift<F>(1);
  if (n < 5) {
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return detail::cofactor_det(m, cols, 0);
  }
  return detail::bareiss_det(m);
}

/// det(f_k(x+j-1)) over 1 <= j,k <= n; the empty Casoratian is 1.
template <Field F>
F casoratian(const std::vector<GridFunction<F>>& fs, long x) {
  const std::size_t n = fs.size();
  Matrix<F> m(n, std::vector<F>(n, lift<F>(0)));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) m[j][k] = fs[k](x + static_cast<long>(j));
  }
  return determinant(m);
}

/// Randomised exact checks of the gauge, two-column reduction and
/// complementary-minor identities on integer-coefficient polynomials of
/// degree <= 6, with n = 0..n_max and x in [x_lo, x_hi]. `instances` draws
/// per identity; the draw is reproducible from `seed`.
Report verify_casoratian_identities(std::uint64_t seed, int instances, int n_max, long x_lo, long x_hi);

Report verify_gauge_identity(const std::vector<GridFunction<Rational>>& fs, const GridFunction<Rational>& g, long x_lo,
                             long x_hi);
Report verify_two_column_identity(const std::vector<GridFunction<Rational>>& fs, const GridFunction<Rational>& g,
                                  const GridFunction<Rational>& h, long x_lo, long x_hi);
Report verify_complementary_minor_identity(const std::vector<GridFunction<Rational>>& fs, long x_lo, long x_hi);

}  // namespace mipoly
