#include "mipoly/virtual_states.hpp"

#include <sstream>

namespace mipoly {

namespace {

std::string pair_text(std::string_view what, const std::string& where, const Rational& lhs, const Rational& rhs) {
  std::ostringstream os;
  os << what << " at " << where << ": lhs=" << lhs << " rhs=" << rhs;
  return os.str();
}

Rational twisted_B_at(const FamilyParams& p, const Rational& s) { return potential_B_at(twisted(p), s); }

void check_linear_at(Report& report, const FamilyParams& p, const Rational& s, const std::string& where) {
  const Rational al = alpha(p);
  const Rational up = advance_site(p, s, 1);
  const Rational lhs1 = al * al * twisted_B_at(p, s) * potential_D_at(p, up);
  const Rational rhs1 = potential_B_at(p, s) * potential_D_at(p, up);
  report.expect(lhs1 == rhs1, [&] { return pair_text("alpha^2 B'D' = BD", where, lhs1, rhs1); });
  const Rational lhs2 = al * (twisted_B_at(p, s) + potential_D_at(p, s)) + alpha_prime(p);
  const Rational rhs2 = potential_B_at(p, s) + potential_D_at(p, s);
  report.expect(lhs2 == rhs2, [&] { return pair_text("alpha(B'+D')+alpha' = B+D", where, lhs2, rhs2); });
}

}  // namespace

AlphaConstants alpha_constants(const FamilyParams& p) { return {alpha(p), alpha_prime(p)}; }

IndexSet index_set(const FamilyParams& p, long v_cap) {
  IndexSet out;
  if (!p.is_q()) {
    for (long v = 1; v <= v_cap; ++v) out.labels.push_back(v);
    return out;
  }
  Rational qv = p.q;
  for (long v = 1; p.a < qv; ++v) {
    out.labels.push_back(v);
    qv *= p.q;
  }
  if (out.labels.empty()) out.warning = "no virtual states: requires a<q (here a=" + p.a.str() + ")";
  return out;
}

Report verify_linear_relation(const FamilyParams& p, long x_max) {
  Report report("linear_relation");
  const Rational al = alpha(p), alp = alpha_prime(p);
  report.expect(al > Rational(0), [&] { return "alpha=" + al.str() + " not positive"; });
  report.expect(alp < Rational(0), [&] { return "alpha'=" + alp.str() + " not negative"; });
  report.expect(alp == virtual_energy(p, 0), [&] { return std::string("alpha' != virtual energy at v=0"); });
  for (long x = 0; x <= x_max; ++x) {
    const std::string where = "x=" + std::to_string(x);
    check_linear_at(report, p, site(p, x), where);
    report.expect(twisted_B(p, x) > Rational(0), [&] { return "B'(x) <= 0 at " + where; });
    if (x >= 1) report.expect(potential_D(p, x) > Rational(0), [&] { return "D'(x) <= 0 at " + where; });
  }
  report.expect(potential_D(p, 0).is_zero(), [] { return std::string("D'(0) != 0"); });
  if (!p.is_q()) {
    for (long k = 1; k <= 6; ++k) {
      const Rational s(mpz_class(2 * k + 1), mpz_class(k + 3));
      check_linear_at(report, p, s, "x=" + s.str());
    }
  }
  return report;
}

Report verify_virtual_energies(const FamilyParams& p, long v_cap) {
  Report report("virtual_energies");
  const auto set = index_set(p, v_cap);
  const long top = set.labels.empty() ? 0 : set.labels.back();
  for (long v = 0; v <= top; ++v) {
    const Rational lhs = virtual_energy(p, v), rhs = virtual_energy_closed(p, v);
    report.expect(lhs == rhs, [&] { return pair_text("closed form", "v=" + std::to_string(v), lhs, rhs); });
  }
  for (long v : set.labels) {
    const Rational e = virtual_energy(p, v);
    report.expect(e < Rational(0), [&] { return "virtual energy " + e.str() + " not negative at v=" + std::to_string(v); });
  }
  return report;
}

Rational xi_positive_series(const FamilyParams& p, long v, long x) {
  const Rational one(1);
  Rational sum(0);
  if (!p.is_q()) {
    for (long k = 0; k <= std::min(v, x); ++k) {
      sum += pochhammer(Rational(v - k + 1), k) * pochhammer(Rational(x - k + 1), k) / pochhammer(p.beta, k) *
             pow(one - p.c, k) / pochhammer(one, k);
    }
    return sum;
  }
  const Rational& a = p.a;
  const Rational& b = p.b;
  const Rational& q = p.q;
  for (long k = 0; k <= v; ++k) {
    sum += q_pochhammer(pow(q, v - k + 1), q, k) * q_pochhammer(b * pow(q, v - k + 1), q, k) /
           (q_pochhammer(a * pow(q, -k), q, k) * q_pochhammer(b * pow(q, v - k + 1 + x), q, k) * q_pochhammer(q, q, k)) *
           pow(a * pow(q, x - v), k);
  }
  const Rational prefactor =
      q_pochhammer(a * pow(q, -v), q, v) * q_pochhammer(b * pow(q, x + 1), q, v) / q_pochhammer(b * q, q, v);
  return prefactor * sum;
}

Report positivity_certificate(const FamilyParams& p, long v, long x_window) {
  Report report("positivity_certificate");
  const Rational one(1);
  for (long x = 0; x <= x_window; ++x) {
    const std::string where = "v=" + std::to_string(v) + ",x=" + std::to_string(x);
    Rational sum(0);
    if (!p.is_q()) {
      for (long k = 0; k <= std::min(v, x); ++k) {
        const Rational term = pochhammer(Rational(v - k + 1), k) * pochhammer(Rational(x - k + 1), k) /
                              pochhammer(p.beta, k) * pow(one - p.c, k) / pochhammer(one, k);
        report.expect(term > Rational(0), [&] { return "non-positive term k=" + std::to_string(k) + " at " + where; });
        sum += term;
      }
    } else {
      const Rational& a = p.a;
      const Rational& b = p.b;
      const Rational& q = p.q;
      const Rational prefactor =
          q_pochhammer(a * pow(q, -v), q, v) * q_pochhammer(b * pow(q, x + 1), q, v) / q_pochhammer(b * q, q, v);
      report.expect(prefactor > Rational(0), [&] { return "non-positive prefactor at " + where; });
      for (long k = 0; k <= v; ++k) {
        const Rational term = q_pochhammer(pow(q, v - k + 1), q, k) * q_pochhammer(b * pow(q, v - k + 1), q, k) /
                              (q_pochhammer(a * pow(q, -k), q, k) * q_pochhammer(b * pow(q, v - k + 1 + x), q, k) *
                               q_pochhammer(q, q, k)) *
                              pow(a * pow(q, x - v), k);
        report.expect(term > Rational(0), [&] { return "non-positive term k=" + std::to_string(k) + " at " + where; });
        sum += term;
      }
      sum *= prefactor;
    }
    const Rational direct = xi_value(p, v, x);
    report.expect(sum == direct, [&] { return pair_text("series vs direct", where, sum, direct); });
    report.expect(direct > Rational(0), [&] { return "xi not positive at " + where; });
  }
  return report;
}

Report verify_twisted_equation(const FamilyParams& p, long v, long x_max) {
  Report report("twisted_equation");
  const FamilyParams t = twisted(p);
  const Rational ev = energy(t, v);
  for (long x = 0; x <= x_max; ++x) {
    const Rational xi = xi_value(p, v, x);
    const Rational lhs = twisted_B(p, x) * (xi - xi_value(p, v, x + 1)) + potential_D(p, x) * (xi - xi_value(p, v, x - 1));
    const Rational rhs = ev * xi;
    report.expect(lhs == rhs, [&] { return pair_text("xi equation", "v=" + std::to_string(v) + ",x=" + std::to_string(x), lhs, rhs); });
  }
  return report;
}

Report verify_nu_relation(const FamilyParams& p, long x_max) {
  Report report("nu_relation");
  const Rational al = alpha(p);
  report.expect(nu(p, 0) == Rational(1), [] { return std::string("nu(0) != 1"); });
  for (long x = -3; x <= x_max; ++x) {
    const std::string where = "x=" + std::to_string(x);
    const Rational lhs = nu(p, x + 1) * al * twisted_B(p, x);
    const Rational rhs = potential_B(p, x) * nu(p, x);
    report.expect(lhs == rhs, [&] { return pair_text("forward nu relation", where, lhs, rhs); });
    if (x != 0) {
      const Rational lhs2 = nu(p, x - 1) * al * potential_D(p, x);
      const Rational rhs2 = potential_D(p, x) * nu(p, x);
      report.expect(lhs2 == rhs2, [&] { return pair_text("backward nu relation", where, lhs2, rhs2); });
    }
  }
  return report;
}

Rational virtual_growth_ratio(const FamilyParams& p) { return p.is_q() ? p.q / p.a : inverse(p.c); }

Report verify_infinite_norm(const FamilyParams& p, long v, long x_max) {
  Report report("infinite_norm");
  const Rational ratio = virtual_growth_ratio(p);
  report.expect(ratio > Rational(1), [&] { return "asymptotic term ratio " + ratio.str() + " <= 1"; });
  const FamilyParams t = twisted(p);
  Rational partial(0);
  Rational previous_term(0);
  for (long x = 0; x <= x_max; ++x) {
    const Rational xi = xi_value(p, v, x);
    const Rational term = phi0_sq(t, x) * xi * xi;
    report.expect(term > Rational(0), [&] { return "non-positive term at x=" + std::to_string(x); });
    if (2 * x >= x_max && x > 0) {
      report.expect(term > previous_term, [&] { return "terms not increasing at x=" + std::to_string(x); });
    }
    partial += term;
    previous_term = term;
  }
  return report;
}

}  // namespace mipoly
