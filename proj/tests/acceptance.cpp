// Acceptance run: one line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mipoly/base_family.hpp"
#include "mipoly/casoratian.hpp"
#include "mipoly/limits.hpp"
#include "mipoly/multi_indexed.hpp"
#include "mipoly/virtual_states.hpp"

using namespace mipoly;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::vector<FamilyParams> base_matrix() {
  return {make_meixner(Rational(1), Rational(1, 2)), make_meixner(Rational(5, 2), Rational(1, 3)),
          make_little_q_jacobi(Rational(1, 32), Rational(1, 3), Rational(1, 2)),
          make_little_q_jacobi(Rational(1, 32), Rational(-1, 2), Rational(1, 2)),
          make_little_q_laguerre(Rational(1, 32), Rational(1, 2))};
}

const std::vector<std::vector<long>>& deletion_sets() {
  static const std::vector<std::vector<long>> sets = {{1}, {2}, {1, 2}, {1, 3}, {2, 4}, {1, 2, 3}};
  return sets;
}

struct Pair {
  FamilyParams params;
  DeletionSet deletion;
};

std::vector<Pair> pair_matrix() {
  std::vector<Pair> out;
  for (const auto& p : base_matrix()) {
    for (const auto& labels : deletion_sets()) out.push_back({p, make_deletion_set(p, labels)});
  }
  return out;
}

long virtual_cap(const FamilyParams& p) { return p.is_q() ? 64 : 8; }

/// Folds reports into an outcome, keeping the first witness.
struct Tally {
  std::size_t checks = 0;
  bool passed = true;
  std::string first;

  void add(const Report& r, const std::string& where) {
    checks += r.checks;
    if (!r.passed && passed) first = where + " " + r.id + ": " + (r.witnesses.empty() ? "" : r.witnesses.front());
    passed = passed && r.passed;
  }
  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok && passed) first = what;
    passed = passed && ok;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << checks << " checks" << (summary.empty() ? "" : ", " + summary);
    if (!passed) os << "; first failure: " << first;
    return {passed, os.str()};
  }
};

std::string where(const Pair& c) { return describe(c.params) + " D=" + describe(c.deletion); }

Outcome criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  for (const auto& p : base_matrix()) {
    for (long n = 0; n <= 8; ++n) t.add(verify_difference_equation(p, n, 30), describe(p));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.require(secs < 30, "runtime over 30 s");
  return t.outcome("n<=8, x<=30");
}

Outcome criterion_2() {
  Tally t;
  for (const auto& p : base_matrix()) t.add(verify_shift_relations(p, 6), describe(p));
  return t.outcome("forward/backward shifts and Rodrigues, n<=6");
}

Outcome criterion_3() {
  Tally t;
  for (const auto& p : base_matrix()) {
    t.add(verify_linear_relation(p, 40), describe(p));
    const auto a = alpha_constants(p);
    t.require(a.alpha > Rational(0) && a.alpha_prime < Rational(0), describe(p) + " alpha signs");
  }
  return t.outcome("x<=40, alpha>0, alpha'<0");
}

Outcome criterion_4() {
  Tally t;
  std::ostringstream caps;
  for (const auto& p : base_matrix()) {
    const auto labels = index_set(p, virtual_cap(p)).labels;
    t.require(!labels.empty(), describe(p) + " has no virtual states");
    for (long v : labels) t.add(positivity_certificate(p, v, 100), describe(p) + " v=" + std::to_string(v));
    t.add(verify_virtual_energies(p, virtual_cap(p)), describe(p));
    caps << (caps.tellp() ? " " : "") << family_tag(p.family) << ":v<=" << (labels.empty() ? 0 : labels.back());
  }
  return t.outcome("x<=100, " + caps.str());
}

Outcome criterion_5() {
  Tally t;
  const auto r = verify_casoratian_identities(20240101, 100, 4, -5, 5);
  t.add(r, "randomized");
  t.require(r.checks == 3 * 100 * 11, "unexpected instance count");
  return t.outcome("3 identities x 100 instances, n<=4");
}

Outcome criterion_6() {
  Tally t;
  for (const auto& c : pair_matrix()) {
    t.add(chain_verify(c.params, c.deletion.labels, 4, 20), where(c));
    t.add(verify_order_independence(c.params, c.deletion, 4, 20), where(c));
  }
  return t.outcome("30 (family, D) pairs, n<=4, x<=20");
}

Outcome criterion_7() {
  Tally t;
  for (const auto& c : pair_matrix()) {
    const MultiIndexedSystem sys(c.params, c.deletion, 5);
    t.add(verify_system(sys), where(c));
    t.add(verify_special_identities(c.params, c.deletion, 5), where(c));
  }
  return t.outcome("normalisation, degrees, leading coefficients, special identities, n<=5");
}

Outcome criterion_8() {
  Tally t;
  for (const auto& c : pair_matrix()) {
    const MultiIndexedSystem sys(c.params, c.deletion, 5);
    t.add(verify_eigen_equation(sys, 5, 20), where(c));
  }
  return t.outcome("n<=5, x<=20");
}

Outcome criterion_9() {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  long sums = 0;
  for (const auto& c : pair_matrix()) {
    const MultiIndexedSystem sys(c.params, c.deletion, 3);
    for (long n = 0; n <= 3; ++n) {
      for (long m = n; m <= 3; ++m) {
        const auto o = orthogonality_sum(sys, n, m, decimal_epsilon(20));
        ++sums;
        t.require(o.passed, where(c) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
    }
  }
  const auto p = make_meixner(Rational(1), Rational(1, 2));
  const MultiIndexedSystem sys(p, make_deletion_set(p, {1}), 0);
  const auto o = orthogonality_sum(sys, 0, 0, decimal_epsilon(20));
  t.require(o.target.is_exact() && o.target.value == Rational(2), "closed value at M(1,1/2) D={1} is not 2");
  t.require(o.passed && abs(o.partial_sum - Rational(2)) <= o.tail_bound, "sum at M(1,1/2) D={1} does not bracket 2");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.require(secs < 120, "runtime over 2 min");
  std::ostringstream os;
  os << sums << " sums, n,m<=3, rel 1e-20, M(1,1/2) D={1} target 2 exact";
  return t.outcome(os.str());
}

Outcome criterion_10() {
  Tally t;
  for (const auto& alpha : {Rational(0), Rational(3, 2), Rational(1, 2)}) {
    t.add(verify_meixner_limits(alpha, 4, 3, deletion_sets(), 2), "alpha=" + alpha.str());
  }
  std::vector<QLimitConfig> runs;
  for (const Family f : {Family::little_q_jacobi, Family::little_q_laguerre}) {
    for (long n = 0; n <= 4; ++n) runs.push_back({f, Rational(1, 2), Rational(1, 3), LimitSubject::polynomial, n, {}});
    for (long v = 1; v <= 3; ++v) runs.push_back({f, Rational(7, 2), Rational(1, 3), LimitSubject::virtual_polynomial, v, {}});
  }
  runs.push_back({Family::little_q_laguerre, Rational(1), Rational(0), LimitSubject::polynomial, 1, {}});
  runs.push_back({Family::little_q_laguerre, Rational(2), Rational(0), LimitSubject::virtual_polynomial, 1, {}});
  double worst_raw = 0, worst_extrapolated = 0, ratio_lo = 1, ratio_hi = 0;
  for (const auto& cfg : runs) {
    const auto res = q_limit_numeric(cfg);
    t.require(res.passed, std::string(family_tag(cfg.family)) + " degree " + std::to_string(cfg.degree) + ": " + res.detail);
    worst_raw = std::max(worst_raw, res.raw_error);
    worst_extrapolated = std::max(worst_extrapolated, res.extrapolated_error);
    if (cfg.degree > 0) {
      for (std::size_t i = res.ratios.size() - 3; i < res.ratios.size(); ++i) {
        ratio_lo = std::min(ratio_lo, res.ratios[i]);
        ratio_hi = std::max(ratio_hi, res.ratios[i]);
      }
    }
  }
  for (const Family f : {Family::little_q_jacobi, Family::little_q_laguerre}) {
    const QLimitConfig cfg{f, Rational(7, 2), Rational(1, 3), LimitSubject::multi_indexed, 1, {1, 2}};
    const auto res = q_limit_numeric(cfg);
    t.require(res.passed, std::string(family_tag(f)) + " D={1,2} stabilisation: " + res.detail);
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "q=1-2^-14: raw error %.2e, first-order extrapolated error %.2e, ratios in [%.3f, %.3f]",
                worst_raw, worst_extrapolated, ratio_lo, ratio_hi);
  return t.outcome(buf);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"base difference equation", criterion_1},
      {"shift relations and Rodrigues formula", criterion_2},
      {"linear relation of potentials", criterion_3},
      {"virtual-state positivity", criterion_4},
      {"Casoratian identities", criterion_5},
      {"chain identities and order independence", criterion_6},
      {"multi-indexed structure", criterion_7},
      {"deformed eigen-equation", criterion_8},
      {"orthogonality", criterion_9},
      {"c->1 and q->1 limits", criterion_10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu %s: %s (%.1f s)\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
