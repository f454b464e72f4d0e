#pragma once

#include "mipoly/certified.hpp"
#include "mipoly/family.hpp"

namespace mipoly {

/// Normalisation constant d_n^2. Exact when possible; otherwise the
/// irrational factor ((1-c)^beta or the infinite q-products) is certified
/// to within eps.
Certified dn_sq(const FamilyParams& p, long n, const Rational& eps = decimal_epsilon(30));

/// B(x)(P(x)-P(x+1)) + D(x)(P(x)-P(x-1)) = E_n P(x) at x = 0..x_max, plus
/// off-lattice sites: rational x for Meixner, rational q^x for the q-families.
Report verify_difference_equation(const FamilyParams& p, long n, long x_max);

/// Forward/backward shift relations for n = 1..n_max at x = 0..n_max+5 and the
/// universal Rodrigues formula for n = 0..n_max.
Report verify_shift_relations(const FamilyParams& p, long n_max);

/// Zero-mode relation B(x) phi0^2(x) = D(x+1) phi0^2(x+1) for x = 0..x_max.
Report verify_ground_state(const FamilyParams& p, long x_max);

/// E_0 = 0 and strictly increasing energies up to n_max.
Report verify_spectrum(const FamilyParams& p, long n_max);

/// Coefficient extraction: degree n, constant term 1, agreement with the
/// direct sum at x = 0..n+5, and the closed-form leading coefficient.
Report verify_polynomial_coeffs(const FamilyParams& p, long n_max);

/// Value of the Rodrigues product phi0(x)^{-2} ((1-e^{-d}) varphi^{-1})^n phi0(x; lambda+n delta)^2.
Rational rodrigues_value(const FamilyParams& p, long n, long x);

}  // namespace mipoly
