#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mipoly/base_family.hpp"
#include "mipoly/casoratian.hpp"
#include "mipoly/certified.hpp"
#include "mipoly/family.hpp"
#include "mipoly/report.hpp"

namespace mipoly {

// ---------------------------------------------------------------------------
// Generic construction, usable over Q, Q(t) and high-precision reals. Labels
// are taken in the given order and may include the level 0 (xi_0 = 1).

/// l_D = sum of labels - M(M-1)/2.
long ell_of(const std::vector<long>& labels);

template <Field F>
std::vector<GridFunction<F>> virtual_grids(const BasicFamilyParams<F>& p, const std::vector<long>& labels) {
  const auto t = twisted(p);
  std::vector<GridFunction<F>> out;
  for (long v : labels) out.push_back([t, v](long x) { return polynomial_value(t, v, x); });
  return out;
}

/// C_D from its closed form.
template <Field F>
F closed_form_c_d(const BasicFamilyParams<F>& p, const std::vector<long>& labels) {
  const long m = static_cast<long>(labels.size());
  F value = lift<F>(1) / varphi_M(p, m, 0);
  for (long j = 1; j <= m; ++j) {
    for (long k = j + 1; k <= m; ++k) {
      value = value * (virtual_energy(p, labels[static_cast<std::size_t>(j - 1)]) -
                       virtual_energy(p, labels[static_cast<std::size_t>(k - 1)])) /
              (alpha(p) * twisted_B(p, j - 1));
    }
  }
  return value;
}

/// d~_{D,n}^2 from its closed form.
template <Field F>
F closed_form_dt_sq(const BasicFamilyParams<F>& p, const std::vector<long>& labels, long n) {
  const long m = static_cast<long>(labels.size());
  F value = varphi_M(p, m, 0) / varphi_M(p, m + 1, 0);
  for (long j = 1; j <= m; ++j) {
    value = value * (energy(p, n) - virtual_energy(p, labels[static_cast<std::size_t>(j - 1)])) /
            (alpha(p) * twisted_B(p, j - 1));
  }
  return value;
}

template <Field F>
struct Denominator {
  Polynomial<F> xi;
  F c_d;         // from the normalisation xi(0) = 1
  F c_d_closed;  // closed form
  long ell = 0;
};

template <Field F>
struct MultiPoly {
  Polynomial<F> poly;
  F c_dn;
  F c_dn_closed;
  F dt_sq;
};

namespace detail {

template <Field F>
Polynomial<F> interpolate_and_check(const BasicFamilyParams<F>& p, const GridFunction<F>& value, long degree,
                                    long extra, std::string_view what) {
  std::vector<F> values;
  for (long x = 0; x <= degree; ++x) values.push_back(value(x));
  Polynomial<F> poly = interpolate_on_lattice(p, values);
  if constexpr (FieldTraits<F>::exact) {
    if (poly.degree() != degree) {
      throw ParameterError(std::string(what) + " has degree " + std::to_string(poly.degree()) + ", expected " +
                           std::to_string(degree) + " (degenerate parameters)");
    }
    for (long x = degree + 1; x <= degree + extra; ++x) {
      if (!(poly(eta(p, x)) == value(x))) {
        throw ParameterError(std::string(what) + " fails re-validation at x=" + std::to_string(x));
      }
    }
  }
  return poly;
}

}  // namespace detail

/// Xi_D from W_C[xi_d1..xi_dM](x) = C_D varphi_M(x) Xi_D(x): lattice values at
/// x = 0..l_D, interpolation in eta, then `extra` further lattice checks.
template <Field F>
Denominator<F> build_denominator(const BasicFamilyParams<F>& p, const std::vector<long>& labels, long extra = 10) {
  const long m = static_cast<long>(labels.size());
  const long ell = ell_of(labels);
  const auto fs = virtual_grids(p, labels);
  const F w0 = casoratian(fs, 0);
  if (is_zero(w0)) throw ParameterError("degenerate deletion set: Casoratian vanishes at x=0");
  const F c_d = w0 / varphi_M(p, m, 0);
  const GridFunction<F> value = [&](long x) { return casoratian(fs, x) / (c_d * varphi_M(p, m, x)); };
  return {detail::interpolate_and_check(p, value, ell, extra, "denominator polynomial"), c_d,
          closed_form_c_d(p, labels), ell};
}

/// P_{D,n} from W_C[xi_d1..xi_dM, nu P_n](x) = C_{D,n} varphi_{M+1}(x) P_{D,n}(x) nu(x; lambda+M delta~).
template <Field F>
MultiPoly<F> build_multi_poly(const BasicFamilyParams<F>& p, const std::vector<long>& labels, long n,
                              long extra = 10) {
  const long m = static_cast<long>(labels.size());
  auto fs = virtual_grids(p, labels);
  fs.push_back([p, n](long x) { return nu(p, x) * polynomial_value(p, n, x); });
  const auto shifted_params = tilde_shifted(p, m);
  const F w0 = casoratian(fs, 0);
  if (is_zero(w0)) throw ParameterError("degenerate deletion set: Casoratian vanishes at x=0");
  const F c_dn = w0 / varphi_M(p, m + 1, 0);
  const GridFunction<F> value = [&](long x) {
    return casoratian(fs, x) / (c_dn * varphi_M(p, m + 1, x) * nu(shifted_params, x));
  };
  const F dt_sq = closed_form_dt_sq(p, labels, n);
  const F sign = lift<F>(m % 2 == 0 ? 1 : -1);
  return {detail::interpolate_and_check(p, value, ell_of(labels) + n, extra, "multi-indexed polynomial"), c_dn,
          sign * closed_form_c_d(p, labels) * dt_sq, dt_sq};
}

// ---------------------------------------------------------------------------
// Exact systems over Q.

/// Sorted distinct labels 1 <= d_1 < ... < d_M inside the virtual index set.
struct DeletionSet {
  std::vector<long> labels;
  long size() const { return static_cast<long>(labels.size()); }
};

/// Validates and sorts; throws ParameterError naming the offending label.
DeletionSet make_deletion_set(const FamilyParams& p, std::vector<long> labels, long v_cap = 64);
std::string describe(const DeletionSet& d);

struct LeadingCoefficients {
  Rational c_n;
  Rational c_xi;
  Rational c_p;
};

/// Closed forms for the top coefficients of P_n, Xi_D and P_{D,n}.
LeadingCoefficients leading_coefficients(const FamilyParams& p, const DeletionSet& d, long n);

class MultiIndexedSystem {
 public:
  /// Builds Xi_D at lambda and lambda+delta and P_{D,n} for n = 0..n_max.
  MultiIndexedSystem(FamilyParams params, DeletionSet deletion, long n_max);

  const FamilyParams& params() const { return params_; }
  const DeletionSet& deletion() const { return deletion_; }
  long ell() const { return denominator_.ell; }
  long n_max() const { return static_cast<long>(polys_.size()) - 1; }
  const Denominator<Rational>& denominator() const { return denominator_; }
  const EtaPolynomial& xi() const { return denominator_.xi; }
  /// Xi_D(lambda + delta).
  const EtaPolynomial& xi_shifted() const { return shifted_xi_; }
  const MultiPoly<Rational>& multi(long n) const;
  const EtaPolynomial& poly(long n) const { return multi(n).poly; }
  /// lambda + M delta~, the parameters of the deformed ground state.
  const FamilyParams& deformed_params() const { return deformed_; }

  Rational xi_at(long x) const;
  Rational xi_shifted_at(long x) const;
  Rational p_at(long n, long x) const;

  /// B_D and D_D in the Xi-based form.
  Rational B(long x) const;
  Rational D(long x) const;
  /// w_D(x) = phi_0(x; lambda+M delta~)^2 / (Xi_D(x) Xi_D(x+1)).
  Rational weight(long x) const;

 private:
  FamilyParams params_;
  DeletionSet deletion_;
  FamilyParams deformed_;
  Denominator<Rational> denominator_;
  EtaPolynomial shifted_xi_;
  std::vector<MultiPoly<Rational>> polys_;
};

/// C_D, C_{D,n} normalisation vs closed forms, Xi_D(0) = P_{D,n}(0) = 1,
/// degrees l_D and l_D + n, Xi_D > 0 on x = 0..x_positive, and the
/// leading-coefficient closed forms.
Report verify_system(const MultiIndexedSystem& sys, long x_positive = 100);

/// B_D > 0, D_D > 0 for x >= 1, D_D(0) = 0, the deformed zero-mode relation,
/// and agreement with the Casoratian standard form of the chain.
Report verify_deformed_potentials(const MultiIndexedSystem& sys, long x_max);

/// Similarity-transformed eigen-equation for P_{D,n} (Xi-based operator)
/// and the ground-state form B_D, D_D acting on P_{D,n}/P_{D,0}.
Report verify_eigen_equation(const MultiIndexedSystem& sys, long n_max, long x_max);

/// Ground-state form applied directly to P_{D,n} (holds only for empty D).
Report verify_eigen_equation_direct_form(const MultiIndexedSystem& sys, long n_max, long x_max);

/// Forward/backward shift relations between lambda and lambda+delta and the
/// round trip B F = H~.
Report verify_shape_invariance(const FamilyParams& p, const DeletionSet& d, long n_max, long x_max);

/// Xi-based forward shift F_D(lambda) f at x (f sampled at x, x+1).
Rational forward_shift(const MultiIndexedSystem& sys, const GridFunction<Rational>& f, long x);
/// Xi-based backward shift B_D(lambda) g at x (g sampled at x, x-1); `sys`
/// is the system at lambda.
Rational backward_shift(const MultiIndexedSystem& sys, const GridFunction<Rational>& g, long x);

struct OrthogonalityResult {
  long n = 0;
  long m = 0;
  long terms = 0;           // partial sum over x = 0..terms-1
  Rational partial_sum;
  Rational tail_bound;      // sum over x >= terms is at most this in absolute value
  Certified target;         // delta_nm / (d_n^2 d~_{D,n}^2)
  Rational tolerance;       // rel_tol * scale
  bool passed = false;
};

/// Certified orthogonality sum. Doubles the truncation point until the tail
/// bound is below half the tolerance, then requires
/// |partial - target| <= tail + target radius <= tolerance.
/// Throws ParameterError when the terms do not decay.
OrthogonalityResult orthogonality_sum(const MultiIndexedSystem& sys, long n, long m,
                                      const Rational& rel_tol = decimal_epsilon(20));

/// Sign changes of P_{D,n}(x) over x = 0..x_max (exact zeros skipped).
long lattice_sign_changes(const MultiIndexedSystem& sys, long n, long x_max = 200);

/// P_{D,0}(lambda) = Xi_D(lambda+delta) and the level-0 reduction
/// P_{D u {0},n}(lambda) = P_{D',n}(lambda+delta~), D' = {d_j - 1}, also for Xi.
Report verify_special_identities(const FamilyParams& p, const DeletionSet& d, long n_max);

// ---------------------------------------------------------------------------
// Step-by-step Darboux chain.

struct ChainState {
  long step = 0;
  std::vector<long> deleted;
  GridFunction<Rational> B_hat;
  GridFunction<Rational> D_hat;
  /// Standard-form potentials built from w_s and w''_{s,0}.
  GridFunction<Rational> B;
  GridFunction<Rational> D;
  int sign = 0;  // sign factor S
};

/// Chain states s = 1..M for the labels in the given order.
std::vector<ChainState> chain_build(const FamilyParams& p, const std::vector<long>& order);

/// Closed-form sign factor for the first s labels of `order`.
int sign_factor(const FamilyParams& p, const std::vector<long>& order, long s);

/// Positivity and boundary values of the hat potentials, the four chain
/// identities (the fourth with w'' in its first right-hand term), the sign
/// conditions, the factorisation bookkeeping, the sign-factor recursion, and
/// at the last step the squared chain eigenvector against the weight times
/// P_{D,n}^2 with the squared proportionality constant.
Report chain_verify(const FamilyParams& p, const std::vector<long>& order, long n_max, long x_max);

/// Chain eigenvectors computed numerically by repeated application of the
/// hat operators (high precision, square roots included) compared with the
/// signed Casoratian formula. Checks the sign factor itself.
Report chain_verify_signed(const FamilyParams& p, const std::vector<long>& order, long n_max, long x_max);

/// The same B_D, D_D, Xi_D, P_{D,n} (and squared chain eigenvectors) for every
/// permutation of the labels.
Report verify_order_independence(const FamilyParams& p, const DeletionSet& d, long n_max, long x_max);

/// Squared proportionality constant between the chain eigenvector and
/// psi_D P_{D,n}: kappa^{M(M-1)/2} (C_{D,n}/C_D)^2 prod alpha B'(0; lambda+(j-1) delta~).
Rational chain_constant_sq(const FamilyParams& p, const std::vector<long>& labels, long n);

/// Fourth chain identity exactly as printed (w' in the first right-hand term);
/// exposed so the misprint can be demonstrated.
bool chain_identity4_as_printed_holds(const FamilyParams& p, const std::vector<long>& order, long s, long n, long x);

}  // namespace mipoly
