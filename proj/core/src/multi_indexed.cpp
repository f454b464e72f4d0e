#include "mipoly/multi_indexed.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <tuple>

#include "mipoly/high_precision.hpp"
#include "mipoly/virtual_states.hpp"

namespace mipoly {

namespace {

std::string at_text(std::string_view what, std::initializer_list<std::pair<const char*, long>> where,
                    const Rational& lhs, const Rational& rhs) {
  std::ostringstream os;
  os << what << " at";
  for (const auto& [name, value] : where) os << ' ' << name << '=' << value;
  os << ": lhs=" << lhs << " rhs=" << rhs;
  return os.str();
}

int sgn(const Rational& r) { return r.sign(); }

Rational abs_sum(const EtaPolynomial& p, bool weighted) {
  Rational total(0);
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) total += (weighted ? Rational(static_cast<long>(k)) : Rational(1)) * abs(c[k]);
  return total;
}

std::string labels_text(const std::vector<long>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + std::to_string(labels[i]);
  return out + "}";
}

}  // namespace

long ell_of(const std::vector<long>& labels) {
  const long m = static_cast<long>(labels.size());
  long sum = 0;
  for (long d : labels) sum += d;
  return sum - m * (m - 1) / 2;
}

// ---------------------------------------------------------------------------
// Deletion sets and closed forms.

DeletionSet make_deletion_set(const FamilyParams& p, std::vector<long> labels, long v_cap) {
  std::sort(labels.begin(), labels.end());
  const auto allowed = index_set(p, v_cap);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 1) throw ParameterError("deletion labels must be >= 1, got " + std::to_string(labels[i]));
    if (i > 0 && labels[i] == labels[i - 1]) {
      throw ParameterError("deletion labels must be distinct, " + std::to_string(labels[i]) + " repeats");
    }
    if (std::find(allowed.labels.begin(), allowed.labels.end(), labels[i]) == allowed.labels.end()) {
      const long top = allowed.labels.empty() ? 0 : allowed.labels.back();
      throw ParameterError("label " + std::to_string(labels[i]) + " outside the virtual index set 1.." +
                           std::to_string(top));
    }
  }
  return {std::move(labels)};
}

std::string describe(const DeletionSet& d) { return labels_text(d.labels); }

LeadingCoefficients leading_coefficients(const FamilyParams& p, const DeletionSet& d, long n) {
  const FamilyParams t = twisted(p);
  const long m = d.size();
  const auto label = [&](long j) { return d.labels[static_cast<std::size_t>(j - 1)]; };
  Rational c_xi(1);
  for (long j = 1; j <= m; ++j) c_xi *= leading_coefficient(t, label(j)) / leading_coefficient(t, j - 1);
  const Rational& q = p.q;
  for (long j = 1; j <= m; ++j) {
    for (long k = j + 1; k <= m; ++k) {
      switch (p.family) {
        case Family::meixner:
          break;
        case Family::little_q_jacobi:
          c_xi *= (p.a * pow(q, -(j - 1 + k - 1)) - p.b * q) / (p.a * pow(q, -(label(j) + label(k))) - p.b * q);
          break;
        case Family::little_q_laguerre:
          c_xi *= pow(q, label(j) + label(k) - (j - 1 + k - 1));
          break;
      }
    }
  }
  const Rational c_n = leading_coefficient(p, n);
  Rational c_p = c_xi * c_n;
  for (long j = 1; j <= m; ++j) {
    switch (p.family) {
      case Family::meixner:
        c_p *= (p.beta + Rational(j - 1)) / (p.beta + Rational(label(j) + n));
        break;
      case Family::little_q_jacobi:
        c_p *= (pow(q, -(j - 1)) - p.b * q) / (pow(q, -(label(j) + n)) - p.b * q);
        break;
      case Family::little_q_laguerre:
        c_p *= pow(q, label(j) + n - (j - 1));
        break;
    }
  }
  return {c_n, c_xi, c_p};
}

// ---------------------------------------------------------------------------
// The exact system.

MultiIndexedSystem::MultiIndexedSystem(FamilyParams params, DeletionSet deletion, long n_max)
    : params_(std::move(params)),
      deletion_(std::move(deletion)),
      deformed_(tilde_shifted(params_, deletion_.size())),
      denominator_(build_denominator(params_, deletion_.labels)),
      shifted_xi_(build_denominator(shifted(params_), deletion_.labels).xi) {
  if (n_max < 0) throw ParameterError("n_max must be >= 0");
  for (long n = 0; n <= n_max; ++n) polys_.push_back(build_multi_poly(params_, deletion_.labels, n));
}

const MultiPoly<Rational>& MultiIndexedSystem::multi(long n) const {
  if (n < 0 || n > n_max()) throw std::out_of_range("degree " + std::to_string(n) + " not built");
  return polys_[static_cast<std::size_t>(n)];
}

Rational MultiIndexedSystem::xi_at(long x) const { return denominator_.xi(eta(params_, x)); }
Rational MultiIndexedSystem::xi_shifted_at(long x) const { return shifted_xi_(eta(params_, x)); }
Rational MultiIndexedSystem::p_at(long n, long x) const { return poly(n)(eta(params_, x)); }

Rational MultiIndexedSystem::B(long x) const {
  return potential_B(deformed_, x) * xi_at(x) / xi_at(x + 1) * xi_shifted_at(x + 1) / xi_shifted_at(x);
}

Rational MultiIndexedSystem::D(long x) const {
  return potential_D(params_, x) * xi_at(x + 1) / xi_at(x) * xi_shifted_at(x - 1) / xi_shifted_at(x);
}

Rational MultiIndexedSystem::weight(long x) const { return phi0_sq(deformed_, x) / (xi_at(x) * xi_at(x + 1)); }

Report verify_system(const MultiIndexedSystem& sys, long x_positive) {
  Report report("system");
  const auto& den = sys.denominator();
  report.expect(den.c_d == den.c_d_closed, [&] { return "C_D=" + den.c_d.str() + " closed form " + den.c_d_closed.str(); });
  report.expect(sys.xi()(Rational(0)) == Rational(1), [] { return std::string("Xi_D(0) != 1"); });
  report.expect(sys.xi().degree() == sys.ell(), [&] { return "deg Xi_D=" + std::to_string(sys.xi().degree()); });
  report.expect(sys.ell() == ell_of(sys.deletion().labels), [] { return std::string("l_D mismatch"); });
  for (long x = 0; x <= x_positive; ++x) {
    report.expect(sys.xi_at(x) > Rational(0), [&] { return "Xi_D not positive at x=" + std::to_string(x); });
  }
  const auto& p = sys.params();
  for (long n = 0; n <= sys.n_max(); ++n) {
    const auto& mp = sys.multi(n);
    report.expect(mp.c_dn == mp.c_dn_closed,
                  [&] { return at_text("C_{D,n} closed form", {{"n", n}}, mp.c_dn, mp.c_dn_closed); });
    report.expect(mp.poly(Rational(0)) == Rational(1), [&] { return "P_{D,n}(0) != 1 at n=" + std::to_string(n); });
    report.expect(mp.poly.degree() == sys.ell() + n, [&] { return "deg P_{D,n} wrong at n=" + std::to_string(n); });
    const auto lead = leading_coefficients(p, sys.deletion(), n);
    const Rational base_lead = polynomial_coeffs(p, n).leading();
    report.expect(base_lead == lead.c_n, [&] { return at_text("c_n", {{"n", n}}, base_lead, lead.c_n); });
    report.expect(sys.xi().leading() == lead.c_xi, [&] { return at_text("c^Xi_D", {{"n", n}}, sys.xi().leading(), lead.c_xi); });
    report.expect(mp.poly.leading() == lead.c_p, [&] { return at_text("c^P_{D,n}", {{"n", n}}, mp.poly.leading(), lead.c_p); });
  }
  return report;
}

// ---------------------------------------------------------------------------
// Chain machinery. All Casoratians are built from coefficient polynomials
// (obtained by interpolation) rather than the hypergeometric sums used by the
// direct construction.

namespace {

class ChainData {
 public:
  ChainData(FamilyParams p, std::vector<long> order) : p_(std::move(p)), order_(std::move(order)), t_(twisted(p_)) {}

  const FamilyParams& params() const { return p_; }
  const std::vector<long>& order() const { return order_; }

  Rational alpha_B_prime(long x) const { return alpha(p_) * potential_B(t_, x); }
  Rational alpha_D_prime(long x) const { return alpha(p_) * potential_D(t_, x); }

  Rational xi(long v, long x) {
    auto it = xi_polys_.find(v);
    if (it == xi_polys_.end()) it = xi_polys_.emplace(v, xi_poly(p_, v)).first;
    return it->second(eta(p_, x));
  }

  Rational nu_p(long n, long x) {
    auto it = p_polys_.find(n);
    if (it == p_polys_.end()) it = p_polys_.emplace(n, polynomial_coeffs(p_, n)).first;
    return nu(p_, x) * it->second(eta(p_, x));
  }

  /// kind 0: w_s; kind 1: w'_{s,v} (idx = v); kind 2: w''_{s,n} (idx = n).
  Rational w(int kind, long s, long idx, long x) {
    const auto key = std::make_tuple(kind, s, idx, x);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const long size = s + (kind == 0 ? 0 : 1);
    Matrix<Rational> m(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
    for (long j = 0; j < size; ++j) {
      for (long k = 0; k < size; ++k) {
        Rational value;
        if (k < s) {
          value = xi(order_[static_cast<std::size_t>(k)], x + j);
        } else if (kind == 1) {
          value = xi(idx, x + j);
        } else {
          value = nu_p(idx, x + j);
        }
        m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = value;
      }
    }
    const Rational det = determinant(m);
    memo_.emplace(key, det);
    return det;
  }

  Rational ws(long s, long x) { return w(0, s, 0, x); }
  Rational wv(long s, long v, long x) { return w(1, s, v, x); }
  Rational wn(long s, long n, long x) { return w(2, s, n, x); }

  Rational b_hat(long s, long x) {
    return alpha_B_prime(x + s - 1) * ws(s - 1, x) / ws(s - 1, x + 1) * ws(s, x + 1) / ws(s, x);
  }
  Rational d_hat(long s, long x) {
    const Rational head = alpha_D_prime(x);
    if (head.is_zero()) return head;
    return head * ws(s - 1, x + 1) / ws(s - 1, x) * ws(s, x - 1) / ws(s, x);
  }
  Rational b_std(long s, long x) {
    return alpha_B_prime(x + s) * ws(s, x) / ws(s, x + 1) * wn(s, 0, x + 1) / wn(s, 0, x);
  }
  Rational d_std(long s, long x) {
    const Rational head = alpha_D_prime(x);
    if (head.is_zero()) return head;
    return head * ws(s, x + 1) / ws(s, x) * wn(s, 0, x - 1) / wn(s, 0, x);
  }
  /// B^_s(x) + D^_s(x+1) + E~_{d_s}; alpha B'(x) + alpha D'(x) + alpha' at s = 0.
  Rational hat_sum(long s, long x) {
    if (s == 0) return alpha_B_prime(x) + alpha_D_prime(x) + alpha_prime(p_);
    return b_hat(s, x) + d_hat(s, x + 1) + virtual_energy(p_, order_[static_cast<std::size_t>(s - 1)]);
  }

  /// Squared chain eigenvector after s deletions.
  Rational eigenvector_sq(long s, long n, long x) {
    Rational prod(1);
    for (long j = 1; j <= s; ++j) prod *= alpha_B_prime(x + j - 1);
    const Rational wpp = wn(s, n, x);
    return prod * phi0_sq(t_, x) * wpp * wpp / (ws(s, x) * ws(s, x + 1));
  }

 private:
  FamilyParams p_;
  std::vector<long> order_;
  FamilyParams t_;
  std::map<long, EtaPolynomial> xi_polys_;
  std::map<long, EtaPolynomial> p_polys_;
  std::map<std::tuple<int, long, long, long>, Rational> memo_;
};

/// Virtual labels usable as the extra column in w'_{s,v}: the index set
/// (capped) minus the chain labels.
std::vector<long> spare_labels(const FamilyParams& p, const std::vector<long>& order) {
  long cap = 0;
  for (long d : order) cap = std::max(cap, d);
  std::vector<long> out;
  for (long v : index_set(p, cap + 2).labels) {
    if (std::find(order.begin(), order.end(), v) == order.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

int sign_factor(const FamilyParams& p, const std::vector<long>& order, long s) {
  int sign = s % 2 == 0 ? 1 : -1;
  for (long i = 0; i < s; ++i) {
    for (long j = i + 1; j < s; ++j) {
      sign *= sgn(virtual_energy(p, order[static_cast<std::size_t>(i)]) -
                  virtual_energy(p, order[static_cast<std::size_t>(j)]));
    }
  }
  return sign;
}

std::vector<ChainState> chain_build(const FamilyParams& p, const std::vector<long>& order) {
  auto data = std::make_shared<ChainData>(p, order);
  std::vector<ChainState> states;
  for (long s = 1; s <= static_cast<long>(order.size()); ++s) {
    ChainState st;
    st.step = s;
    st.deleted.assign(order.begin(), order.begin() + s);
    st.B_hat = [data, s](long x) { return data->b_hat(s, x); };
    st.D_hat = [data, s](long x) { return data->d_hat(s, x); };
    st.B = [data, s](long x) { return data->b_std(s, x); };
    st.D = [data, s](long x) { return data->d_std(s, x); };
    st.sign = sign_factor(p, order, s);
    states.push_back(std::move(st));
  }
  return states;
}

Rational chain_constant_sq(const FamilyParams& p, const std::vector<long>& labels, long n) {
  const long m = static_cast<long>(labels.size());
  const auto den = build_denominator(p, labels);
  const auto mp = build_multi_poly(p, labels, n);
  const Rational ratio = mp.c_dn / den.c_d;
  Rational value = pow(kappa(p), m * (m - 1) / 2) * ratio * ratio;
  for (long j = 1; j <= m; ++j) value *= alpha(p) * twisted_B(tilde_shifted(p, j - 1), 0);
  return value;
}

bool chain_identity4_as_printed_holds(const FamilyParams& p, const std::vector<long>& order, long s, long n, long x) {
  ChainData data(p, order);
  const Rational lhs = data.alpha_B_prime(x + s) * data.ws(s, x) * data.wn(s + 1, n, x);
  const Rational rhs = data.alpha_D_prime(x) * data.ws(s, x + 1) * data.wv(s + 1, n, x - 1) +
                       (virtual_energy(p, order[static_cast<std::size_t>(s)]) - energy(p, n)) * data.ws(s + 1, x) *
                           data.wn(s, n, x);
  return lhs == rhs;
}

Report chain_verify(const FamilyParams& p, const std::vector<long>& order, long n_max, long x_max) {
  Report report("chain " + labels_text(order));
  ChainData data(p, order);
  const long big_m = static_cast<long>(order.size());
  const auto spare = spare_labels(p, order);
  const auto label = [&](long s) { return order[static_cast<std::size_t>(s - 1)]; };
  const auto e_tilde = [&](long v) { return virtual_energy(p, v); };

  int recursive_sign = 0;
  for (long s = 0; s <= big_m; ++s) {
    // identities valid from s = 0 on, multiplied through by the Casoratian in
    // their denominators since w''_{s,n} may vanish on the lattice
    for (long x = 0; x <= x_max; ++x) {
      for (long v : order) {
        if (std::find(order.begin(), order.begin() + s, v) != order.begin() + s) continue;
        const Rational lhs = (data.hat_sum(s, x) - e_tilde(v)) * data.wv(s, v, x);
        const Rational rhs =
            data.alpha_B_prime(x + s) * data.ws(s, x) / data.ws(s, x + 1) * data.wv(s, v, x + 1) +
            data.alpha_D_prime(x) * data.ws(s, x + 1) / data.ws(s, x) * data.wv(s, v, x - 1);
        report.expect(lhs == rhs, [&] { return at_text("id1", {{"s", s}, {"v", v}, {"x", x}}, lhs, rhs); });
      }
      for (long v : spare) {
        const Rational lhs = (data.hat_sum(s, x) - e_tilde(v)) * data.wv(s, v, x);
        const Rational rhs =
            data.alpha_B_prime(x + s) * data.ws(s, x) / data.ws(s, x + 1) * data.wv(s, v, x + 1) +
            data.alpha_D_prime(x) * data.ws(s, x + 1) / data.ws(s, x) * data.wv(s, v, x - 1);
        report.expect(lhs == rhs, [&] { return at_text("id1", {{"s", s}, {"v", v}, {"x", x}}, lhs, rhs); });
      }
      for (long n = 0; n <= n_max; ++n) {
        const Rational lhs = (data.hat_sum(s, x) - energy(p, n)) * data.wn(s, n, x);
        const Rational rhs =
            data.alpha_B_prime(x + s) * data.ws(s, x) / data.ws(s, x + 1) * data.wn(s, n, x + 1) +
            data.alpha_D_prime(x) * data.ws(s, x + 1) / data.ws(s, x) * data.wn(s, n, x - 1);
        report.expect(lhs == rhs, [&] { return at_text("id2", {{"s", s}, {"n", n}, {"x", x}}, lhs, rhs); });
      }
      if (s < big_m) {
        const long next = label(s + 1);
        std::vector<long> vs = spare;
        for (long k = s + 2; k <= big_m; ++k) vs.push_back(label(k));
        for (long v : vs) {
          const Rational lhs = data.alpha_B_prime(x + s) * data.ws(s, x) * data.wv(s + 1, v, x);
          const Rational rhs = data.alpha_D_prime(x) * data.ws(s, x + 1) * data.wv(s + 1, v, x - 1) +
                               (e_tilde(next) - e_tilde(v)) * data.ws(s + 1, x) * data.wv(s, v, x);
          report.expect(lhs == rhs, [&] { return at_text("id3", {{"s", s}, {"v", v}, {"x", x}}, lhs, rhs); });
        }
        for (long n = 0; n <= n_max; ++n) {
          const Rational lhs = data.alpha_B_prime(x + s) * data.ws(s, x) * data.wn(s + 1, n, x);
          const Rational rhs = data.alpha_D_prime(x) * data.ws(s, x + 1) * data.wn(s + 1, n, x - 1) +
                               (e_tilde(next) - energy(p, n)) * data.ws(s + 1, x) * data.wn(s, n, x);
          report.expect(lhs == rhs, [&] { return at_text("id4", {{"s", s}, {"n", n}, {"x", x}}, lhs, rhs); });
          // two-column reduction linking consecutive steps
          const Rational red_lhs = data.ws(s, x + 1) * data.wn(s + 1, n, x);
          const Rational red_rhs = data.ws(s + 1, x) * data.wn(s, n, x + 1) - data.ws(s + 1, x + 1) * data.wn(s, n, x);
          report.expect(red_lhs == red_rhs, [&] { return at_text("two-column step", {{"s", s}, {"n", n}, {"x", x}}, red_lhs, red_rhs); });
        }
      }
    }
    if (s == 0) continue;

    // sign factor: closed form vs recursion
    if (s == 1) {
      recursive_sign = -1;
    } else {
      int prod = 1;
      for (long i = 1; i < s; ++i) prod *= sgn(e_tilde(label(i)) - e_tilde(label(s)));
      recursive_sign = -recursive_sign * prod;
    }
    const int closed_sign = sign_factor(p, order, s);
    report.expect(closed_sign == recursive_sign, [&] {
      return "sign factor at s=" + std::to_string(s) + ": closed " + std::to_string(closed_sign) + " recursion " +
             std::to_string(recursive_sign);
    });

    int pair_sign = 1;
    for (long i = 1; i <= s; ++i) {
      for (long j = i + 1; j <= s; ++j) pair_sign *= sgn(e_tilde(label(i)) - e_tilde(label(j)));
    }
    for (long x = 0; x <= x_max; ++x) {
      const Rational bh = data.b_hat(s, x), dh = data.d_hat(s, x);
      report.expect(bh > Rational(0), [&] { return at_text("B^ positive", {{"s", s}, {"x", x}}, bh, Rational(0)); });
      if (x == 0) {
        report.expect(dh.is_zero(), [&] { return "D^(0) != 0 at s=" + std::to_string(s); });
      } else {
        report.expect(dh > Rational(0), [&] { return at_text("D^ positive", {{"s", s}, {"x", x}}, dh, Rational(0)); });
      }
      report.expect(pair_sign * sgn(data.ws(s, x)) > 0, [&] { return at_text("sign of w_s", {{"s", s}, {"x", x}}, data.ws(s, x), Rational(0)); });
      for (long v : spare) {
        int v_sign = pair_sign;
        for (long i = 1; i <= s; ++i) v_sign *= sgn(e_tilde(label(i)) - e_tilde(v));
        report.expect(v_sign * sgn(data.wv(s, v, x)) > 0,
                      [&] { return at_text("sign of w'_{s,v}", {{"s", s}, {"v", v}, {"x", x}}, data.wv(s, v, x), Rational(0)); });
      }
      const int n_sign = pair_sign * (s % 2 == 0 ? 1 : -1);
      report.expect(n_sign * sgn(data.wn(s, 0, x)) > 0,
                    [&] { return at_text("sign of w''_{s,0}", {{"s", s}, {"x", x}}, data.wn(s, 0, x), Rational(0)); });

      // factorisation bookkeeping
      const Rational prod_lhs = bh * data.d_hat(s, x + 1);
      const Rational prod_rhs = s == 1 ? potential_B(p, x) * potential_D(p, x + 1)
                                       : data.b_hat(s - 1, x + 1) * data.d_hat(s - 1, x + 1);
      report.expect(prod_lhs == prod_rhs, [&] { return at_text("hat product", {{"s", s}, {"x", x}}, prod_lhs, prod_rhs); });
      const Rational sum_lhs = bh + dh + e_tilde(label(s));
      const Rational sum_rhs = s == 1 ? potential_B(p, x) + potential_D(p, x) : data.hat_sum(s - 1, x);
      report.expect(sum_lhs == sum_rhs, [&] { return at_text("hat sum", {{"s", s}, {"x", x}}, sum_lhs, sum_rhs); });
      const Rational std_prod = data.b_std(s, x) * data.d_std(s, x + 1);
      const Rational hat_prod = data.b_hat(s, x + 1) * data.d_hat(s, x + 1);
      report.expect(std_prod == hat_prod, [&] { return at_text("standard product", {{"s", s}, {"x", x}}, std_prod, hat_prod); });
      const Rational std_sum = data.b_std(s, x) + data.d_std(s, x);
      report.expect(std_sum == data.hat_sum(s, x),
                    [&] { return at_text("standard sum", {{"s", s}, {"x", x}}, std_sum, data.hat_sum(s, x)); });
    }
  }

  // squared eigenvectors at the last step against the closed system
  if (big_m > 0) {
    std::vector<long> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    const MultiIndexedSystem sys(p, DeletionSet{sorted}, n_max);
    for (long n = 0; n <= n_max; ++n) {
      const Rational k_sq = chain_constant_sq(p, order, n);
      Rational expected = sys.multi(n).dt_sq;
      for (long v : order) expected *= energy(p, n) - virtual_energy(p, v);
      report.expect(k_sq == expected, [&] { return at_text("constant^2 = prod(E_n - E~) d~^2", {{"n", n}}, k_sq, expected); });
      for (long x = 0; x <= x_max; ++x) {
        const Rational lhs = data.eigenvector_sq(big_m, n, x);
        const Rational pv = sys.p_at(n, x);
        const Rational rhs = k_sq * sys.weight(x) * pv * pv;
        report.expect(lhs == rhs, [&] { return at_text("squared eigenvector", {{"n", n}, {"x", x}}, lhs, rhs); });
      }
    }
  }
  return report;
}

Report chain_verify_signed(const FamilyParams& p, const std::vector<long>& order, long n_max, long x_max) {
  Report report("chain signs " + labels_text(order));
  ChainData data(p, order);
  const long big_m = static_cast<long>(order.size());
  const FamilyParams t = twisted(p);
  const HighPrecision tolerance = HighPrecision("1e-40");
  const auto hp = [](const Rational& r) { return to_high_precision(r); };
  for (long n = 0; n <= n_max; ++n) {
    // phi_n(x) = phi_0(x) P_n(x) on the window needed by M forward differences
    std::vector<HighPrecision> current;
    for (long x = 0; x <= x_max + big_m; ++x) current.push_back(sqrt(hp(phi0_sq(p, x))) * hp(polynomial_value(p, n, x)));
    for (long s = 1; s <= big_m; ++s) {
      std::vector<HighPrecision> next;
      for (long x = 0; x + s <= x_max + big_m; ++x) {
        const auto xs = static_cast<std::size_t>(x);
        next.push_back(sqrt(hp(data.b_hat(s, x))) * current[xs] - sqrt(hp(data.d_hat(s, x + 1))) * current[xs + 1]);
      }
      current = std::move(next);
      const int sign = sign_factor(p, order, s);
      for (long x = 0; x <= x_max; ++x) {
        Rational prod(1);
        for (long j = 1; j <= s; ++j) prod *= data.alpha_B_prime(x + j - 1);
        const HighPrecision formula = HighPrecision(sign) * sqrt(hp(prod) * hp(phi0_sq(t, x))) /
                                      sqrt(hp(data.ws(s, x) * data.ws(s, x + 1))) * hp(data.wn(s, n, x));
        const HighPrecision got = current[static_cast<std::size_t>(x)];
        const HighPrecision scale = std::max(HighPrecision(1), abs(formula));
        report.expect(abs(got - formula) <= tolerance * scale, [&] {
          return "signed eigenvector at s=" + std::to_string(s) + ",n=" + std::to_string(n) + ",x=" +
                 std::to_string(x) + ": chain=" + got.str(20) + " formula=" + formula.str(20);
        });
      }
    }
  }
  return report;
}

Report verify_order_independence(const FamilyParams& p, const DeletionSet& d, long n_max, long x_max) {
  Report report("order independence " + describe(d));
  if (d.labels.size() < 2) return report;
  const auto reference_den = build_denominator(p, d.labels);
  std::vector<MultiPoly<Rational>> reference_polys;
  for (long n = 0; n <= n_max; ++n) reference_polys.push_back(build_multi_poly(p, d.labels, n));
  const auto reference_chain = chain_build(p, d.labels);
  ChainData reference_data(p, d.labels);
  const long big_m = d.size();

  std::vector<long> perm = d.labels;
  while (std::next_permutation(perm.begin(), perm.end())) {
    const std::string tag = labels_text(perm);
    const auto den = build_denominator(p, perm);
    report.expect(den.xi == reference_den.xi, [&] { return "Xi_D differs for order " + tag; });
    for (long n = 0; n <= n_max; ++n) {
      const auto mp = build_multi_poly(p, perm, n);
      report.expect(mp.poly == reference_polys[static_cast<std::size_t>(n)].poly,
                    [&] { return "P_{D,n} differs for order " + tag + " at n=" + std::to_string(n); });
    }
    const auto chain = chain_build(p, perm);
    ChainData data(p, perm);
    for (long x = 0; x <= x_max; ++x) {
      const auto& last = chain.back();
      const auto& ref = reference_chain.back();
      report.expect(last.B(x) == ref.B(x), [&] { return at_text("B_D for order " + tag, {{"x", x}}, last.B(x), ref.B(x)); });
      report.expect(last.D(x) == ref.D(x), [&] { return at_text("D_D for order " + tag, {{"x", x}}, last.D(x), ref.D(x)); });
      for (long n = 0; n <= n_max; ++n) {
        const Rational lhs = data.eigenvector_sq(big_m, n, x);
        const Rational rhs = reference_data.eigenvector_sq(big_m, n, x);
        report.expect(lhs == rhs, [&] { return at_text("squared eigenvector for order " + tag, {{"n", n}, {"x", x}}, lhs, rhs); });
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Deformed system identities.

Report verify_deformed_potentials(const MultiIndexedSystem& sys, long x_max) {
  Report report("deformed_potentials");
  const auto chain = chain_build(sys.params(), sys.deletion().labels);
  for (long x = 0; x <= x_max; ++x) {
    const Rational b = sys.B(x), d = sys.D(x);
    report.expect(b > Rational(0), [&] { return at_text("B_D positive", {{"x", x}}, b, Rational(0)); });
    if (x == 0) {
      report.expect(d.is_zero(), [] { return std::string("D_D(0) != 0"); });
    } else {
      report.expect(d > Rational(0), [&] { return at_text("D_D positive", {{"x", x}}, d, Rational(0)); });
    }
    // zero mode: B_D(x) phi_D0(x)^2 = D_D(x+1) phi_D0(x+1)^2 with phi_D0^2 proportional to w_D P_{D,0}^2
    const Rational g0 = sys.weight(x) * sys.p_at(0, x) * sys.p_at(0, x);
    const Rational g1 = sys.weight(x + 1) * sys.p_at(0, x + 1) * sys.p_at(0, x + 1);
    report.expect(b * g0 == sys.D(x + 1) * g1, [&] { return at_text("zero mode", {{"x", x}}, b * g0, sys.D(x + 1) * g1); });
    if (!chain.empty()) {
      const Rational cb = chain.back().B(x), cd = chain.back().D(x);
      report.expect(b == cb, [&] { return at_text("B_D vs chain standard form", {{"x", x}}, b, cb); });
      report.expect(d == cd, [&] { return at_text("D_D vs chain standard form", {{"x", x}}, d, cd); });
    } else {
      report.expect(b == potential_B(sys.params(), x), [&] { return "empty D: B_D != B at x=" + std::to_string(x); });
      report.expect(d == potential_D(sys.params(), x), [&] { return "empty D: D_D != D at x=" + std::to_string(x); });
    }
  }
  report.expect(sys.weight(0) * sys.xi_at(1) == Rational(1), [] { return std::string("w_D(0) != 1/Xi_D(1)"); });
  return report;
}

Report verify_eigen_equation(const MultiIndexedSystem& sys, long n_max, long x_max) {
  Report report("eigen_equation");
  const auto& p = sys.params();
  for (long n = 0; n <= std::min(n_max, sys.n_max()); ++n) {
    const Rational en = energy(p, n);
    for (long x = 0; x <= x_max; ++x) {
      const Rational px = sys.p_at(n, x);
      const Rational lhs =
          potential_B(sys.deformed_params(), x) * sys.xi_at(x) / sys.xi_at(x + 1) *
              (sys.xi_shifted_at(x + 1) / sys.xi_shifted_at(x) * px - sys.p_at(n, x + 1)) +
          potential_D(p, x) * sys.xi_at(x + 1) / sys.xi_at(x) *
              (sys.xi_shifted_at(x - 1) / sys.xi_shifted_at(x) * px - sys.p_at(n, x - 1));
      report.expect(lhs == en * px, [&] { return at_text("H~_D P_{D,n}", {{"n", n}, {"x", x}}, lhs, en * px); });
      const auto ratio = [&](long y) { return sys.p_at(n, y) / sys.p_at(0, y); };
      const Rational r = ratio(x);
      const Rational lhs2 = sys.B(x) * (r - ratio(x + 1)) + sys.D(x) * (r - ratio(x - 1));
      report.expect(lhs2 == en * r, [&] { return at_text("ground-state form on P_{D,n}/P_{D,0}", {{"n", n}, {"x", x}}, lhs2, en * r); });
    }
  }
  return report;
}

Report verify_eigen_equation_direct_form(const MultiIndexedSystem& sys, long n_max, long x_max) {
  Report report("eigen_equation_direct_form");
  const auto& p = sys.params();
  for (long n = 0; n <= std::min(n_max, sys.n_max()); ++n) {
    for (long x = 0; x <= x_max; ++x) {
      const Rational px = sys.p_at(n, x);
      const Rational lhs = sys.B(x) * (px - sys.p_at(n, x + 1)) + sys.D(x) * (px - sys.p_at(n, x - 1));
      const Rational rhs = energy(p, n) * px;
      report.expect(lhs == rhs, [&] { return at_text("B_D, D_D on P_{D,n}", {{"n", n}, {"x", x}}, lhs, rhs); });
    }
  }
  return report;
}

Rational forward_shift(const MultiIndexedSystem& sys, const GridFunction<Rational>& f, long x) {
  const auto& p = sys.params();
  return potential_B(sys.deformed_params(), 0) / (varphi(p, x) * sys.xi_at(x + 1)) *
         (sys.xi_shifted_at(x + 1) * f(x) - sys.xi_shifted_at(x) * f(x + 1));
}

Rational backward_shift(const MultiIndexedSystem& sys, const GridFunction<Rational>& g, long x) {
  const auto& p = sys.params();
  const auto& deformed = sys.deformed_params();
  const Rational first = potential_B(deformed, x) * sys.xi_at(x) * varphi(p, x) * g(x);
  const Rational d = potential_D(p, x);
  const Rational second = d.is_zero() ? d : d * sys.xi_at(x + 1) * varphi(p, x - 1) * g(x - 1);
  return (first - second) / (potential_B(deformed, 0) * sys.xi_shifted_at(x));
}

Report verify_shape_invariance(const FamilyParams& p, const DeletionSet& d, long n_max, long x_max) {
  Report report("shape_invariance");
  const MultiIndexedSystem sys(p, d, n_max);
  const MultiIndexedSystem up(shifted(p), d, std::max(0L, n_max - 1));
  report.expect(up.xi() == sys.xi_shifted(), [] { return std::string("Xi_D(lambda+delta) mismatch"); });
  for (long n = 0; n <= n_max; ++n) {
    const GridFunction<Rational> pn = [&sys, n](long x) { return sys.p_at(n, x); };
    const GridFunction<Rational> fpn = [&sys, pn](long x) { return forward_shift(sys, pn, x); };
    const Rational en = energy(p, n);
    for (long x = 0; x <= x_max; ++x) {
      const Rational fwd = fpn(x);
      const Rational expected = n == 0 ? Rational(0) : en * up.p_at(n - 1, x);
      report.expect(fwd == expected, [&] { return at_text("forward shift", {{"n", n}, {"x", x}}, fwd, expected); });
      if (n >= 1) {
        const GridFunction<Rational> lower = [&up, n](long y) { return up.p_at(n - 1, y); };
        const Rational bwd = backward_shift(sys, lower, x);
        report.expect(bwd == sys.p_at(n, x), [&] { return at_text("backward shift", {{"n", n}, {"x", x}}, bwd, sys.p_at(n, x)); });
      }
      const Rational round = backward_shift(sys, fpn, x);
      report.expect(round == en * sys.p_at(n, x), [&] { return at_text("round trip", {{"n", n}, {"x", x}}, round, en * sys.p_at(n, x)); });
    }
  }
  return report;
}

Report verify_special_identities(const FamilyParams& p, const DeletionSet& d, long n_max) {
  Report report("special_identities");
  const MultiIndexedSystem sys(p, d, n_max);
  report.expect(sys.poly(0) == sys.xi_shifted(), [] { return std::string("P_{D,0}(lambda) != Xi_D(lambda+delta)"); });

  std::vector<long> with_zero = d.labels;
  with_zero.push_back(0);
  std::vector<long> lowered;
  for (long v : d.labels) lowered.push_back(v - 1);
  const FamilyParams down = tilde_shifted(p, 1);
  report.expect(build_denominator(p, with_zero).xi == build_denominator(down, lowered).xi,
                [] { return std::string("Xi_{D u {0}}(lambda) != Xi_{D'}(lambda+delta~)"); });
  for (long n = 0; n <= n_max; ++n) {
    const auto lhs = build_multi_poly(p, with_zero, n).poly;
    const auto rhs = build_multi_poly(down, lowered, n).poly;
    report.expect(lhs == rhs, [&] { return "P_{D u {0},n}(lambda) != P_{D',n}(lambda+delta~) at n=" + std::to_string(n); });
  }
  return report;
}

// ---------------------------------------------------------------------------
// Orthogonality.

namespace {

Certified diagonal_target(const MultiIndexedSystem& sys, long n, const Rational& rel_tol) {
  const Rational dt = sys.multi(n).dt_sq;
  Certified d = dn_sq(sys.params(), n, decimal_epsilon(30));
  // refine until the relative radius is far below the tolerance
  for (int round = 0; round < 8 && d.radius > rel_tol * abs(d.value) / Rational(64); ++round) {
    d = dn_sq(sys.params(), n, rel_tol * abs(d.lower()) / Rational(256));
  }
  return inverse(dt * d);
}

}  // namespace

OrthogonalityResult orthogonality_sum(const MultiIndexedSystem& sys, long n, long m, const Rational& rel_tol) {
  if (rel_tol <= Rational(0)) throw ParameterError("rel_tol must be positive");
  OrthogonalityResult out;
  out.n = n;
  out.m = m;
  const auto& p = sys.params();
  const auto& deformed = sys.deformed_params();
  const EtaPolynomial& pn = sys.poly(n);
  const EtaPolynomial& pm = sys.poly(m);
  const EtaPolynomial& xi = sys.xi();

  const Certified tn = diagonal_target(sys, n, rel_tol);
  Rational scale = tn.lower();
  if (n == m) {
    out.target = tn;
  } else {
    out.target = Certified::exact(Rational(0));
    scale = std::min(scale, diagonal_target(sys, m, rel_tol).lower());
  }
  if (scale <= Rational(0)) throw ParameterError("normalisation is not positive; parameters outside the positive range");
  out.tolerance = rel_tol * scale;

  const Rational an = abs_sum(pn, false), am = abs_sum(pm, false);
  const long power = n + m;
  Rational k_const;
  long x0 = 1;
  if (!p.is_q()) {
    const Rational lc = xi.leading();
    if (lc <= Rational(0)) throw ParameterError("denominator polynomial has non-positive leading coefficient");
    // for x >= 1 only negative lower coefficients can pull Xi below lc x^l
    Rational negative_sum(0);
    for (const auto& ck : xi.coefficients()) {
      if (ck < Rational(0)) negative_sum -= ck;
    }
    x0 = std::max(1L, ceil(Rational(2) * negative_sum / lc).get_si());
    k_const = Rational(4) * an * am / (lc * lc);
  } else {
    const Rational at_one = xi(Rational(1));
    if (at_one <= Rational(0)) throw ParameterError("denominator polynomial not positive at eta=1");
    const Rational slope = abs_sum(xi, true);
    x0 = 1;
    if (!slope.is_zero()) {
      const Rational threshold = at_one / (Rational(2) * slope);
      Rational qx = p.q;
      while (qx > threshold) {
        qx *= p.q;
        ++x0;
      }
    }
    k_const = Rational(4) * an * am / (at_one * at_one);
  }

  const auto ratio_bound = [&](long big_n) -> Rational {
    if (!p.is_q()) {
      const Rational base = std::max(Rational(1), (Rational(big_n) + deformed.beta) / Rational(big_n + 1));
      return deformed.c * base * pow(Rational(1) + Rational(1) / Rational(big_n), power);
    }
    const Rational qn1 = pow(p.q, big_n + 1);
    return deformed.a * p.q * (Rational(1) + abs(deformed.b) * qn1) / (Rational(1) - qn1);
  };
  const auto majorant = [&](long x) -> Rational {
    Rational g = k_const * phi0_sq(deformed, x);
    if (!p.is_q()) g *= pow(Rational(x), power);
    return g;
  };

  long big_n = std::max(x0, 8L);
  constexpr long kMaxTerms = 1L << 16;
  Rational tail;
  for (;;) {
    const Rational r = ratio_bound(big_n);
    if (r < Rational(1)) {
      tail = majorant(big_n + 1) / (Rational(1) - r);
      if (tail <= out.tolerance / Rational(2)) break;
    }
    if (big_n > kMaxTerms) throw ParameterError("orthogonality terms do not decay fast enough (parameter range)");
    big_n *= 2;
  }

  Rational sum(0);
  Rational ground = phi0_sq(deformed, 0);
  for (long x = 0; x <= big_n; ++x) {
    if (x > 0) ground *= potential_B(deformed, x - 1) / potential_D(deformed, x);
    const Rational e = eta(p, x);
    sum += ground / (xi(e) * xi(eta(p, x + 1))) * pn(e) * pm(e);
  }
  out.terms = big_n + 1;
  out.partial_sum = sum;
  out.tail_bound = tail;
  const Rational budget = tail + out.target.radius;
  out.passed = abs(sum - out.target.value) <= budget && budget <= out.tolerance;
  return out;
}

long lattice_sign_changes(const MultiIndexedSystem& sys, long n, long x_max) {
  long changes = 0;
  int previous = 0;
  for (long x = 0; x <= x_max; ++x) {
    const int s = sys.p_at(n, x).sign();
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

}  // namespace mipoly
