#pragma once

#include <string>
#include <vector>

#include "mipoly/family.hpp"

namespace mipoly {

struct AlphaConstants {
  Rational alpha;
  Rational alpha_prime;
};

/// (alpha, alpha') of the linear relation H = alpha H' + alpha'.
AlphaConstants alpha_constants(const FamilyParams& p);

/// Admissible virtual-state labels. Meixner: 1..v_cap. q-families:
/// 1..v_max with v_max the largest v such that a < q^v; an empty set comes
/// with a warning.
struct IndexSet {
  std::vector<long> labels;
  std::string warning;
};
IndexSet index_set(const FamilyParams& p, long v_cap);

/// alpha^2 B'(x) D'(x+1) = B(x) D(x+1) and alpha(B'+D') + alpha' = B + D on
/// x = 0..x_max (and rational x for Meixner), boundary conditions on B', D',
/// and the signs alpha > 0 > alpha'.
Report verify_linear_relation(const FamilyParams& p, long x_max);

/// Virtual energy against its factorised closed form, v = 0..v_max, with
/// Ẽ_0 = alpha' and Ẽ_v < 0 on the index set.
Report verify_virtual_energies(const FamilyParams& p, long v_cap);

/// Term-by-term positive rearranged series for xi_v(x), x = 0..x_window,
/// compared with the direct sum.
Report positivity_certificate(const FamilyParams& p, long v, long x_window = 100);

/// Value of the positive rearranged series at x (no positivity checks).
Rational xi_positive_series(const FamilyParams& p, long v, long x);

/// B'(x)(xi(x)-xi(x+1)) + D'(x)(xi(x)-xi(x-1)) = E_v(t(lambda)) xi(x).
Report verify_twisted_equation(const FamilyParams& p, long v, long x_max);

/// nu(x+1) alpha B'(x) = B(x) nu(x) and nu(x-1) alpha D'(x) = D(x) nu(x).
Report verify_nu_relation(const FamilyParams& p, long x_max);

/// The virtual vector phi~_0(x)^2 xi_v(x)^2 is not square summable: the
/// exact asymptotic term ratio exceeds 1 and partial sums keep growing with
/// eventually increasing terms on [x_max/2, x_max].
Report verify_infinite_norm(const FamilyParams& p, long v, long x_max);

/// Asymptotic ratio of consecutive terms of phi~_0^2 xi_v^2: 1/c or q/a.
Rational virtual_growth_ratio(const FamilyParams& p);

}  // namespace mipoly
