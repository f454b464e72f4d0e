#pragma once

#include <stdexcept>

#include "mipoly/field.hpp"

namespace mipoly {

/// Rising factorial (a)_k = a(a+1)...(a+k-1); (a)_0 = 1.
template <Field F>
F pochhammer(const F& a, long k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative length");
  F result = lift<F>(1);
  for (long j = 0; j < k; ++j) result = result * (a + lift<F>(j));
  return result;
}

/// Finite q-shifted factorial (a;q)_k = prod_{j<k} (1 - a q^j).
template <Field F>
F q_pochhammer(const F& a, const F& q, long k) {
  if (k < 0) throw std::invalid_argument("q_pochhammer: negative length");
  F result = lift<F>(1);
  F term = a;
  for (long j = 0; j < k; ++j) {
    result = result * (lift<F>(1) - term);
    term = term * q;
  }
  return result;
}

}  // namespace mipoly
