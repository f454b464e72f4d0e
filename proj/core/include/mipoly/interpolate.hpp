#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mipoly/polynomial.hpp"

namespace mipoly {

template <Field F>
struct InterpolationNode {
  F abscissa;
  F value;
};

/// Unique polynomial of degree < points.size() through all points, built from
/// Newton divided differences. Throws std::invalid_argument on an empty input
/// or repeated abscissae.
template <Field F>
Polynomial<F> interpolate(std::span<const InterpolationNode<F>> points) {
  const std::size_t n = points.size();
  if (n == 0) throw std::invalid_argument("interpolate: no points");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (is_zero(F(points[i].abscissa - points[j].abscissa))) {
        throw std::invalid_argument("interpolate: duplicate abscissae");
      }
    }
  }
  std::vector<F> diff;
  diff.reserve(n);
  for (const auto& pt : points) diff.push_back(pt.value);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      diff[i] = (diff[i] - diff[i - 1]) / (points[i].abscissa - points[i - level].abscissa);
    }
  }
  // Horner on the Newton form.
  Polynomial<F> result = Polynomial<F>::constant(diff[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * Polynomial<F>::linear(lift<F>(1), F(-points[i].abscissa)) + Polynomial<F>::constant(diff[i]);
  }
  return result;
}

template <Field F>
Polynomial<F> interpolate(const std::vector<InterpolationNode<F>>& points) {
  return interpolate(std::span<const InterpolationNode<F>>(points));
}

}  // namespace mipoly
