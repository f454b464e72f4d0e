#include "mipoly/base_family.hpp"

#include <sstream>

namespace mipoly {

namespace {

std::string diff_text(std::string_view what, const std::string& where, const Rational& lhs, const Rational& rhs) {
  std::ostringstream os;
  os << what << " at " << where << ": lhs=" << lhs << " rhs=" << rhs;
  return os.str();
}

// Difference-equation residual at an arbitrary site.
void check_difference_at(Report& report, const FamilyParams& p, long n, const Rational& s, const std::string& where) {
  const Rational up = advance_site(p, s, 1);
  const Rational down = advance_site(p, s, -1);
  const Rational pn = polynomial_value_at(p, n, s);
  const Rational lhs = potential_B_at(p, s) * (pn - polynomial_value_at(p, n, up)) +
                       potential_D_at(p, s) * (pn - polynomial_value_at(p, n, down));
  const Rational rhs = energy(p, n) * pn;
  report.expect(lhs == rhs, [&] { return diff_text("difference equation n=" + std::to_string(n), where, lhs, rhs); });
}

}  // namespace

Certified dn_sq(const FamilyParams& p, long n, const Rational& eps) {
  const Rational one(1);
  Rational prefactor;
  if (!p.is_q()) {
    prefactor = pochhammer(p.beta, n) * pow(p.c, n) / pochhammer(one, n);
  } else {
    const Rational& a = p.a;
    const Rational& b = p.b;
    const Rational& q = p.q;
    prefactor = pow(a, n) * pow(q, n * n) / (q_pochhammer(q, q, n) * q_pochhammer(a * q, q, n));
    if (p.family == Family::little_q_jacobi) {
      prefactor *= q_pochhammer(b * q, q, n) * q_pochhammer(a * b * q, q, n);
      prefactor *= (one - a * b * pow(q, 2 * n + 1)) / (one - a * b * q);
    }
  }
  // Tighten the budget of the irrational factor until the product meets eps.
  for (Rational budget = eps;; budget /= Rational(1L << 20)) {
    Certified tail;
    if (!p.is_q()) {
      tail = certified_power(one - p.c, p.beta, budget);
    } else if (p.family == Family::little_q_laguerre) {
      tail = q_pochhammer_infinite(p.a * p.q, p.q, budget);
    } else {
      tail = q_pochhammer_infinite(p.a * p.q, p.q, budget) *
             inverse(q_pochhammer_infinite(p.a * p.b * p.q * p.q, p.q, budget));
    }
    Certified result = prefactor * tail;
    if (result.radius < eps) return result;
  }
}

Report verify_difference_equation(const FamilyParams& p, long n, long x_max) {
  Report report("difference_equation");
  for (long x = 0; x <= x_max; ++x) check_difference_at(report, p, n, site(p, x), "x=" + std::to_string(x));
  // Off-lattice points: both sides are rational in the site.
  static const long kNum[] = {1, 5, 7, 22, 41};
  static const long kDen[] = {3, 7, 2, 9, 5};
  for (std::size_t i = 0; i < std::size(kNum); ++i) {
    const Rational s(mpz_class(kNum[i]), mpz_class(kDen[i]));
    if (p.is_q() && s.is_zero()) continue;
    check_difference_at(report, p, n, s, "site=" + s.str());
  }
  return report;
}

Rational rodrigues_value(const FamilyParams& p, long n, long x) {
  // g holds values on y = x-n .. x; each application of (1-e^{-d}) varphi^{-1}
  // consumes one point on the left.
  std::vector<Rational> g;
  const FamilyParams top = shifted(p, n);
  for (long y = x - n; y <= x; ++y) g.push_back(phi0_sq(top, y));
  for (long step = 0; step < n; ++step) {
    std::vector<Rational> next;
    const long first = x - n + step + 1;
    for (std::size_t i = 1; i < g.size(); ++i) {
      const long y = first + static_cast<long>(i) - 1;
      next.push_back(g[i] / varphi(p, y) - g[i - 1] / varphi(p, y - 1));
    }
    g = std::move(next);
  }
  return g.back() / phi0_sq(p, x);
}

Report verify_shift_relations(const FamilyParams& p, long n_max) {
  Report report("shift_relations");
  const Rational b0 = potential_B(p, 0);
  const FamilyParams up = shifted(p);
  for (long n = 1; n <= n_max; ++n) {
    for (long x = 0; x <= n_max + 5; ++x) {
      const std::string where = "n=" + std::to_string(n) + ",x=" + std::to_string(x);
      const Rational forward = b0 / varphi(p, x) * (polynomial_value(p, n, x) - polynomial_value(p, n, x + 1));
      const Rational forward_rhs = energy(p, n) * polynomial_value(up, n - 1, x);
      report.expect(forward == forward_rhs, [&] { return diff_text("forward shift", where, forward, forward_rhs); });
      const Rational backward = (potential_B(p, x) * varphi(p, x) * polynomial_value(up, n - 1, x) -
                                 potential_D(p, x) * varphi(p, x - 1) * polynomial_value(up, n - 1, x - 1)) /
                                b0;
      const Rational backward_rhs = polynomial_value(p, n, x);
      report.expect(backward == backward_rhs, [&] { return diff_text("backward shift", where, backward, backward_rhs); });
    }
  }
  for (long n = 0; n <= n_max; ++n) {
    for (long x = 0; x <= n_max + 5; ++x) {
      const Rational lhs = rodrigues_value(p, n, x);
      const Rational rhs = polynomial_value(p, n, x);
      report.expect(lhs == rhs, [&] {
        return diff_text("rodrigues", "n=" + std::to_string(n) + ",x=" + std::to_string(x), lhs, rhs);
      });
    }
  }
  return report;
}

Report verify_ground_state(const FamilyParams& p, long x_max) {
  Report report("ground_state");
  report.expect(phi0_sq(p, 0) == Rational(1), [&] { return std::string("phi0^2(0) != 1"); });
  for (long x = 0; x <= x_max; ++x) {
    const Rational lhs = potential_B(p, x) * phi0_sq(p, x);
    const Rational rhs = potential_D(p, x + 1) * phi0_sq(p, x + 1);
    report.expect(lhs == rhs, [&] { return diff_text("zero mode", "x=" + std::to_string(x), lhs, rhs); });
  }
  return report;
}

Report verify_spectrum(const FamilyParams& p, long n_max) {
  Report report("spectrum");
  report.expect(energy(p, 0).is_zero(), [] { return std::string("E_0 != 0"); });
  for (long n = 0; n < n_max; ++n) {
    const Rational lo = energy(p, n), hi = energy(p, n + 1);
    report.expect(hi > lo, [&] { return diff_text("E_{n+1} > E_n", "n=" + std::to_string(n), hi, lo); });
  }
  return report;
}

Report verify_polynomial_coeffs(const FamilyParams& p, long n_max) {
  Report report("polynomial_coeffs");
  for (long n = 0; n <= n_max; ++n) {
    const EtaPolynomial poly = polynomial_coeffs(p, n);
    const std::string tag = "n=" + std::to_string(n);
    report.expect(poly.degree() == n, [&] { return tag + ": degree " + std::to_string(poly.degree()); });
    report.expect(poly.coefficient(0) == Rational(1), [&] { return tag + ": constant term " + poly.coefficient(0).str(); });
    if (poly.degree() == n) {
      const Rational closed = leading_coefficient(p, n);
      report.expect(poly.leading() == closed, [&] { return diff_text("leading coefficient", tag, poly.leading(), closed); });
    }
    for (long x = 0; x <= n + 5; ++x) {
      const Rational lhs = poly(eta(p, x));
      const Rational rhs = polynomial_value(p, n, x);
      report.expect(lhs == rhs, [&] { return diff_text("re-evaluation", tag + ",x=" + std::to_string(x), lhs, rhs); });
    }
  }
  return report;
}

}  // namespace mipoly
