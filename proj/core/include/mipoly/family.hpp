#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mipoly/interpolate.hpp"
#include "mipoly/pochhammer.hpp"
#include "mipoly/polynomial.hpp"
#include "mipoly/report.hpp"

namespace mipoly {

enum class Family { meixner, little_q_jacobi, little_q_laguerre };

/// Short tag: "M", "lqJ" or "lqL".
std::string_view family_tag(Family f);
/// Accepts the short tags and the long names ("meixner", ...).
Family parse_family(std::string_view text);

/// Parameters of one base system over a scalar field F.
///
/// Meixner uses (beta, c); little q-Jacobi uses (a, b, q); little q-Laguerre
/// is little q-Jacobi with b = 0. Unused fields are ignored. Values produced
/// by twisted() deliberately leave the physical parameter range.
template <Field F>
struct BasicFamilyParams {
  Family family = Family::meixner;
  F beta = lift<F>(1);
  F c = lift<F>(Rational(1, 2));
  F a = lift<F>(0);
  F b = lift<F>(0);
  F q = lift<F>(1);

  bool is_q() const { return family != Family::meixner; }
};

using FamilyParams = BasicFamilyParams<Rational>;

/// Validated constructors; throw ParameterError naming the violated condition.
FamilyParams make_meixner(const Rational& beta, const Rational& c);
FamilyParams make_little_q_jacobi(const Rational& a, const Rational& b, const Rational& q, long special_bound = 64);
FamilyParams make_little_q_laguerre(const Rational& a, const Rational& q);

/// Checks the parameter range of the base system. For little q-Jacobi the
/// degenerate configurations a = b q^{m+1}, 0 <= m <= special_bound, are
/// rejected because the virtual polynomials lose degree there.
void validate(const FamilyParams& p, long special_bound = 64);

/// "M(beta=1,c=1/2)" style label.
std::string describe(const FamilyParams& p);

template <Field G>
BasicFamilyParams<G> lift_params(const FamilyParams& p) {
  return {p.family, lift<G>(p.beta), lift<G>(p.c), lift<G>(p.a), lift<G>(p.b), lift<G>(p.q)};
}

// ---------------------------------------------------------------------------
// Lattice geometry. A "site" is x for Meixner and q^x for the q-families; all
// potentials and polynomials are rational in the site, which lets the same
// formulas run at non-lattice points.

template <Field F>
F site(const BasicFamilyParams<F>& p, long x) {
  return p.is_q() ? ipow(p.q, x) : lift<F>(x);
}

/// Site of x + k given the site of x.
template <Field F>
F advance_site(const BasicFamilyParams<F>& p, const F& s, long k) {
  return p.is_q() ? F(s * ipow(p.q, k)) : F(s + lift<F>(k));
}

template <Field F>
F eta_at_site(const BasicFamilyParams<F>& p, const F& s) {
  return p.is_q() ? F(lift<F>(1) - s) : s;
}

template <Field F>
F eta(const BasicFamilyParams<F>& p, long x) {
  return eta_at_site(p, site(p, x));
}

template <Field F>
F varphi(const BasicFamilyParams<F>& p, long x) {
  return p.is_q() ? ipow(p.q, x) : lift<F>(1);
}

template <Field F>
F potential_B_at(const BasicFamilyParams<F>& p, const F& s) {
  if (!p.is_q()) return p.c * (s + p.beta);
  return p.a * (lift<F>(1) / s - p.b * p.q);
}

template <Field F>
F potential_D_at(const BasicFamilyParams<F>& p, const F& s) {
  if (!p.is_q()) return s;
  return lift<F>(1) / s - lift<F>(1);
}

template <Field F>
F potential_B(const BasicFamilyParams<F>& p, long x) {
  return potential_B_at(p, site(p, x));
}

template <Field F>
F potential_D(const BasicFamilyParams<F>& p, long x) {
  return potential_D_at(p, site(p, x));
}

template <Field F>
F energy(const BasicFamilyParams<F>& p, long n) {
  if (!p.is_q()) return (lift<F>(1) - p.c) * lift<F>(n);
  return (ipow(p.q, -n) - lift<F>(1)) * (lift<F>(1) - p.a * p.b * ipow(p.q, n + 1));
}

// ---------------------------------------------------------------------------
// Parameter maps.

/// lambda + u delta.
template <Field F>
BasicFamilyParams<F> shifted(BasicFamilyParams<F> p, long u = 1) {
  if (!p.is_q()) {
    p.beta = p.beta + lift<F>(u);
  } else {
    const F qu = ipow(p.q, u);
    p.a = p.a * qu;
    p.b = p.b * qu;
  }
  return p;
}

/// lambda + u delta-tilde, the shift intertwined with the twist.
template <Field F>
BasicFamilyParams<F> tilde_shifted(BasicFamilyParams<F> p, long u = 1) {
  if (!p.is_q()) {
    p.beta = p.beta + lift<F>(u);
  } else {
    p.a = p.a * ipow(p.q, -u);
    p.b = p.b * ipow(p.q, u);
  }
  return p;
}

/// The involutive twist: c -> 1/c (Meixner), a -> 1/a (q-families).
template <Field F>
BasicFamilyParams<F> twisted(BasicFamilyParams<F> p) {
  if (!p.is_q()) {
    p.c = lift<F>(1) / p.c;
  } else {
    p.a = lift<F>(1) / p.a;
  }
  return p;
}

template <Field F>
F kappa(const BasicFamilyParams<F>& p) {
  return p.is_q() ? F(lift<F>(1) / p.q) : lift<F>(1);
}

// ---------------------------------------------------------------------------
// Polynomials.

/// Terminating hypergeometric sum for P_n at an arbitrary site.
template <Field F>
F polynomial_value_at(const BasicFamilyParams<F>& p, long n, const F& s) {
  const F one = lift<F>(1);
  F sum = one;
  F term = one;
  if (!p.is_q()) {
    const F z = one - one / p.c;
    for (long k = 0; k < n; ++k) {
      term = term * (lift<F>(k - n) * (lift<F>(k) - s) * z) / ((p.beta + lift<F>(k)) * lift<F>(k + 1));
      sum = sum + term;
    }
    return sum;
  }
  F qk = one;                              // q^k
  const F ab_qn1 = p.a * p.b * ipow(p.q, n + 1);
  F q_minus_n_k = ipow(p.q, -n);           // q^{k-n}
  for (long k = 0; k < n; ++k) {
    const F num = (one - q_minus_n_k) * (one - ab_qn1 * qk) * (s - qk);
    const F den = (one - p.b * qk * p.q) * (one - qk * p.q) * qk * p.a;
    term = -(term * num / den);
    sum = sum + term;
    qk = qk * p.q;
    q_minus_n_k = q_minus_n_k * p.q;
  }
  return sum;
}

template <Field F>
F polynomial_value(const BasicFamilyParams<F>& p, long n, long x) {
  return polynomial_value_at(p, n, site(p, x));
}

/// phi_0(x)^2, normalised to 1 at x = 0 and set to 0 for x < 0.
template <Field F>
F phi0_sq(const BasicFamilyParams<F>& p, long x) {
  if (x < 0) return lift<F>(0);
  if (!p.is_q()) return pochhammer(p.beta, x) * ipow(p.c, x) / pochhammer(lift<F>(1), x);
  return q_pochhammer(F(p.b * p.q), p.q, x) * ipow(F(p.a * p.q), x) / q_pochhammer(p.q, p.q, x);
}

/// Closed-form leading coefficient of P_n in eta.
template <Field F>
F leading_coefficient(const BasicFamilyParams<F>& p, long n) {
  if (!p.is_q()) return ipow(F(lift<F>(1) - lift<F>(1) / p.c), n) / pochhammer(p.beta, n);
  const F lead = ipow(F(-p.a), -n) * ipow(p.q, -n * n);
  return lead * q_pochhammer(F(p.a * p.b * ipow(p.q, n + 1)), p.q, n) / q_pochhammer(F(p.b * p.q), p.q, n);
}

/// Interpolates nodes (eta(x), values[x]) for x = 0..values.size()-1.
template <Field F>
Polynomial<F> interpolate_on_lattice(const BasicFamilyParams<F>& p, const std::vector<F>& values) {
  std::vector<InterpolationNode<F>> nodes;
  nodes.reserve(values.size());
  for (std::size_t x = 0; x < values.size(); ++x) nodes.push_back({eta(p, static_cast<long>(x)), values[x]});
  return interpolate(nodes);
}

/// P_n as a polynomial in eta, by exact interpolation at x = 0..n.
template <Field F>
Polynomial<F> polynomial_coeffs(const BasicFamilyParams<F>& p, long n) {
  std::vector<F> values;
  for (long x = 0; x <= n; ++x) values.push_back(polynomial_value(p, n, x));
  return interpolate_on_lattice(p, values);
}

// ---------------------------------------------------------------------------
// Twist data shared by the virtual-state and deletion machinery.

template <Field F>
F alpha(const BasicFamilyParams<F>& p) {
  return p.is_q() ? p.a : p.c;
}

template <Field F>
F alpha_prime(const BasicFamilyParams<F>& p) {
  const F one = lift<F>(1);
  if (!p.is_q()) return -((one - p.c) * p.beta);
  return -((one - p.a) * (one - p.b * p.q));
}

/// B'(x) = B(x; t(lambda)).
template <Field F>
F twisted_B(const BasicFamilyParams<F>& p, long x) {
  return potential_B(twisted(p), x);
}

/// alpha E_v(t(lambda)) + alpha'.
template <Field F>
F virtual_energy(const BasicFamilyParams<F>& p, long v) {
  return alpha(p) * energy(twisted(p), v) + alpha_prime(p);
}

/// The factorised closed form of the virtual energy.
template <Field F>
F virtual_energy_closed(const BasicFamilyParams<F>& p, long v) {
  const F one = lift<F>(1);
  if (!p.is_q()) return -((one - p.c) * (lift<F>(v) + p.beta));
  return -((one - p.a * ipow(p.q, -v)) * (one - p.b * ipow(p.q, v + 1)));
}

/// nu(x) = c^x or a^x, for any integer x.
template <Field F>
F nu(const BasicFamilyParams<F>& p, long x) {
  return ipow(alpha(p), x);
}

/// Virtual-state polynomial xi_v(x) = P_v(x; t(lambda)).
template <Field F>
F xi_value(const BasicFamilyParams<F>& p, long v, long x) {
  return polynomial_value(twisted(p), v, x);
}

template <Field F>
Polynomial<F> xi_poly(const BasicFamilyParams<F>& p, long v) {
  return polynomial_coeffs(twisted(p), v);
}

/// varphi_M(x): 1 for Meixner, q^{M(M-1)x/2 + M(M-1)(M-2)/6} otherwise.
template <Field F>
F varphi_M(const BasicFamilyParams<F>& p, long m, long x) {
  if (!p.is_q()) return lift<F>(1);
  return ipow(p.q, m * (m - 1) * x / 2 + m * (m - 1) * (m - 2) / 6);
}

}  // namespace mipoly
