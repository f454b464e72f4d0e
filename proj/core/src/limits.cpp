#include "mipoly/limits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mipoly/high_precision.hpp"

namespace mipoly {

namespace {

using RF = ParamRationalFunction;

/// Generalised binomial (z choose k) = (z-k+1)_k / k!.
Rational binomial(const Rational& z, long k) {
  if (k < 0) return Rational(0);
  return pochhammer(z - Rational(k - 1), k) / pochhammer(Rational(1), k);
}

Polynomial<Rational> scaled(const Polynomial<Rational>& p, const Rational& factor) { return factor * p; }

/// Coefficient k times (1-t)^-k, then the limit t -> 1.
Polynomial<Rational> rescaled_limit(const Polynomial<RF>& p) {
  const RF one_minus_t = RF(Rational(1)) - RF::parameter();
  std::vector<Rational> out;
  RF factor(Rational(1));
  for (const auto& c : p.coefficients()) {
    out.push_back(limit_at(c / factor, Rational(1)));
    factor = factor * one_minus_t;
  }
  return Polynomial<Rational>(std::move(out));
}

BasicFamilyParams<RF> meixner_over_t(const Rational& alpha) {
  BasicFamilyParams<RF> p;
  p.family = Family::meixner;
  p.beta = RF(alpha + Rational(1));
  p.c = RF::parameter();
  p.a = RF(Rational(0));
  p.b = RF(Rational(0));
  p.q = RF(Rational(0));
  return p;
}

std::vector<Rational> sample_points(Family family) {
  if (family == Family::little_q_jacobi) return {Rational(1, 10), Rational(3, 10), Rational(1, 2), Rational(7, 10), Rational(9, 10)};
  return {Rational(1, 4), Rational(1), Rational(5, 2), Rational(4)};
}

template <Field F>
BasicFamilyParams<F> q_params(Family family, const F& q, const F& a, const F& b) {
  BasicFamilyParams<F> p;
  p.family = family;
  p.beta = lift<F>(0);
  p.c = lift<F>(0);
  p.a = a;
  p.b = family == Family::little_q_jacobi ? b : lift<F>(0);
  p.q = q;
  return p;
}

/// The rescaled quantity whose q -> 1 limit is classical, at sample eta.
template <Field F>
F limit_quantity(const BasicFamilyParams<F>& p, LimitSubject subject, long degree, const std::vector<long>& labels,
                 const Polynomial<F>* multi, const F& eta_sample) {
  const F one = lift<F>(1);
  const auto value_at_site = [&](const F& s) -> F {
    switch (subject) {
      case LimitSubject::polynomial:
        return polynomial_value_at(p, degree, s);
      case LimitSubject::virtual_polynomial:
        return polynomial_value_at(twisted(p), degree, s);
      case LimitSubject::multi_indexed:
        return (*multi)(F(one - s));
    }
    return one;
  };
  (void)labels;
  if (p.family == Family::little_q_jacobi) return value_at_site(eta_sample);
  return value_at_site(F((one - p.q) * eta_sample)) / value_at_site(lift<F>(0));
}

}  // namespace

ClassicalPolynomial laguerre(const Rational& alpha, long n) {
  std::vector<Rational> c;
  for (long k = 0; k <= n; ++k) {
    c.push_back(binomial(alpha + Rational(n), n - k) * pow(Rational(-1), k) / pochhammer(Rational(1), k));
  }
  return {ClassicalKind::laguerre, alpha, Rational(0), n, Polynomial<Rational>(std::move(c))};
}

ClassicalPolynomial jacobi(const Rational& alpha, const Rational& beta, long n) {
  using P = Polynomial<Rational>;
  const P minus = P::linear(Rational(1, 2), Rational(-1, 2));
  const P plus = P::linear(Rational(1, 2), Rational(1, 2));
  P total;
  for (long s = 0; s <= n; ++s) {
    P term = P::constant(binomial(alpha + Rational(n), n - s) * binomial(beta + Rational(n), s));
    for (long i = 0; i < s; ++i) term = term * minus;
    for (long i = 0; i < n - s; ++i) term = term * plus;
    total = total + term;
  }
  return {ClassicalKind::jacobi, alpha, beta, n, total};
}

Polynomial<Rational> meixner_limit_exact(const Rational& alpha, const std::vector<long>& labels, long n) {
  const auto p = meixner_over_t(alpha);
  if (labels.empty()) return rescaled_limit(polynomial_coeffs(p, n));
  return rescaled_limit(build_multi_poly(p, labels, n).poly);
}

Polynomial<Rational> meixner_xi_limit_exact(const Rational& alpha, long v) {
  return rescaled_limit(xi_poly(meixner_over_t(alpha), v));
}

Polynomial<Rational> meixner_limit_target(const Rational& alpha, long n) {
  const auto l = laguerre(alpha, n);
  return scaled(l.coefficients, inverse(l(Rational(0))));
}

Polynomial<Rational> meixner_xi_limit_target(const Rational& alpha, long v) {
  const auto l = laguerre(alpha, v);
  return scaled(l.coefficients.compose_linear(Rational(-1), Rational(0)), inverse(l(Rational(0))));
}

Report verify_meixner_limits(const Rational& alpha, long n_max, long v_max,
                             const std::vector<std::vector<long>>& deletion_sets, long n_max_multi) {
  Report report("meixner_limits");
  for (long n = 0; n <= n_max; ++n) {
    const auto got = meixner_limit_exact(alpha, {}, n);
    const auto want = meixner_limit_target(alpha, n);
    report.expect(got == want, [&] { return "base limit differs from Laguerre ratio at n=" + std::to_string(n); });
  }
  for (long v = 1; v <= v_max; ++v) {
    const auto got = meixner_xi_limit_exact(alpha, v);
    const auto want = meixner_xi_limit_target(alpha, v);
    report.expect(got == want, [&] { return "deforming limit differs from Laguerre ratio at v=" + std::to_string(v); });
  }
  for (const auto& labels : deletion_sets) {
    for (long n = 0; n <= n_max_multi; ++n) {
      std::string where = "D={";
      for (std::size_t i = 0; i < labels.size(); ++i) where += (i ? "," : "") + std::to_string(labels[i]);
      where += "},n=" + std::to_string(n);
      try {
        const auto lim = meixner_limit_exact(alpha, labels, n);
        report.expect(lim.degree() == ell_of(labels) + n, [&] { return "limit degree " + std::to_string(lim.degree()) + " at " + where; });
        report.expect(lim.coefficient(0) == Rational(1), [&] { return "limit constant term " + lim.coefficient(0).str() + " at " + where; });
      } catch (const LimitError& e) {
        report.fail(std::string("no finite limit at ") + where + ": " + e.what());
      }
    }
  }
  return report;
}

Rational q_limit_target(Family family, const Rational& alpha, const Rational& beta, LimitSubject subject, long degree,
                        const Rational& eta) {
  const Rational signed_alpha = subject == LimitSubject::virtual_polynomial ? -alpha : alpha;
  if (family == Family::little_q_jacobi) {
    const auto j = jacobi(signed_alpha, beta, degree);
    if (is_zero(j(Rational(-1)))) throw ParameterError("classical ratio undefined: P_n(-1) vanishes");
    return j(Rational(1) - Rational(2) * eta) / j(Rational(-1));
  }
  const auto l = laguerre(signed_alpha, degree);
  if (is_zero(l(Rational(0)))) throw ParameterError("classical ratio undefined: L_n(0) vanishes (needs alpha>v)");
  return l(eta) / l(Rational(0));
}

Rational q_limit_exact(Family family, long alpha, long beta, LimitSubject subject, long degree, const Rational& eta) {
  if (subject == LimitSubject::multi_indexed) throw std::invalid_argument("exact q-limit covers classical subjects only");
  const RF q = RF::parameter();
  const auto p = q_params<RF>(family, q, ipow(q, alpha), ipow(q, beta));
  return limit_at(limit_quantity<RF>(p, subject, degree, {}, nullptr, RF(eta)), Rational(1));
}

QLimitResult q_limit_numeric(const QLimitConfig& config, double tolerance) {
  QLimitResult out;
  out.config = config;
  const auto points = sample_points(config.family);
  const bool classical = config.subject != LimitSubject::multi_indexed;
  std::vector<HighPrecision> targets;
  if (classical) {
    for (const auto& e : points) {
      targets.push_back(to_high_precision(q_limit_target(config.family, config.alpha, config.beta, config.subject, config.degree, e)));
    }
  }
  const HighPrecision alpha = to_high_precision(config.alpha);
  const HighPrecision beta = to_high_precision(config.beta);
  std::vector<HighPrecision> previous, before_previous;
  for (int k = config.k_min; k <= config.k_max; ++k) {
    const HighPrecision q = HighPrecision(1) - ldexp(HighPrecision(1), -k);
    const auto p = q_params<HighPrecision>(config.family, q, pow(q, alpha), pow(q, beta));
    Polynomial<HighPrecision> multi;
    if (!classical) multi = build_multi_poly(p, config.labels, config.degree).poly;
    std::vector<HighPrecision> values;
    for (const auto& e : points) {
      values.push_back(limit_quantity<HighPrecision>(p, config.subject, config.degree, config.labels, &multi, to_high_precision(e)));
    }
    if (classical) {
      HighPrecision worst = 0;
      for (std::size_t i = 0; i < values.size(); ++i) worst = std::max(worst, HighPrecision(abs(values[i] - targets[i])));
      out.errors.push_back(worst.convert_to<double>());
    }
    if (!previous.empty()) {
      HighPrecision worst = 0;
      for (std::size_t i = 0; i < values.size(); ++i) worst = std::max(worst, HighPrecision(abs(values[i] - previous[i])));
      out.differences.push_back(worst.convert_to<double>());
    }
    before_previous = std::move(previous);
    previous = std::move(values);
  }
  for (std::size_t i = 1; i < out.differences.size(); ++i) {
    out.ratios.push_back(out.differences[i - 1] == 0 ? 0.0 : out.differences[i] / out.differences[i - 1]);
  }
  std::ostringstream detail;
  // degree 0 quantities are identically 1: no convergence order to measure
  const bool constant = config.degree == 0 && config.subject != LimitSubject::multi_indexed;
  bool ratios_ok = true;
  if (!constant) {
    if (out.ratios.size() < 3) {
      ratios_ok = false;
    } else {
      for (std::size_t i = out.ratios.size() - 3; i < out.ratios.size(); ++i) {
        ratios_ok = ratios_ok && out.ratios[i] >= 0.4 && out.ratios[i] <= 0.6;
      }
    }
  } else {
    for (double d : out.differences) ratios_ok = ratios_ok && d < 1e-50;
  }
  if (classical) {
    out.raw_error = out.errors.back();
    HighPrecision worst = 0;
    for (std::size_t i = 0; i < previous.size(); ++i) {
      const HighPrecision extrapolated = HighPrecision(2) * previous[i] - before_previous[i];
      worst = std::max(worst, HighPrecision(abs(extrapolated - targets[i])));
    }
    out.extrapolated_error = worst.convert_to<double>();
    out.passed = ratios_ok && out.extrapolated_error <= tolerance;
  } else {
    out.passed = ratios_ok;
  }
  detail << "raw error " << out.raw_error << ", extrapolated error " << out.extrapolated_error << ", last ratios";
  for (std::size_t i = out.ratios.size() >= 3 ? out.ratios.size() - 3 : 0; i < out.ratios.size(); ++i) detail << ' ' << out.ratios[i];
  out.detail = detail.str();
  return out;
}

}  // namespace mipoly
