#pragma once

#include <random>

#include "mipoly/rational.hpp"

namespace mipoly::testing {

/// Small random rationals with nonzero denominators, reproducible by seed.
class RationalSampler {
 public:
  explicit RationalSampler(unsigned seed) : gen_(seed) {}

  Rational next(long max_num = 9, long max_den = 7) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    const long n = num(gen_);
    const long d = den(gen_);
    return {mpz_class(n), mpz_class(d)};
  }

  Rational nonzero(long max_num = 9, long max_den = 7) {
    for (;;) {
      Rational r = next(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

 private:
  std::mt19937 gen_;
};

}  // namespace mipoly::testing
