#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "mipoly/base_family.hpp"
#include "mipoly/casoratian.hpp"
#include "mipoly/limits.hpp"
#include "mipoly/virtual_states.hpp"

namespace mipoly::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kCasoratianSeed = 20240101;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string default_params(Family f) {
  switch (f) {
    case Family::meixner:
      return "beta=1,c=1/2";
    case Family::little_q_jacobi:
      return "a=1/32,b=1/3,q=1/2";
    case Family::little_q_laguerre:
      return "a=1/32,q=1/2";
  }
  return {};
}

FamilyParams parse_params(Family family, const std::string& text) {
  std::map<std::string, Rational> values;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("parameter '" + item + "' is not key=value");
    values[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
  }
  std::vector<std::string> keys;
  switch (family) {
    case Family::meixner:
      keys = {"beta", "c"};
      break;
    case Family::little_q_jacobi:
      keys = {"a", "b", "q"};
      break;
    case Family::little_q_laguerre:
      keys = {"a", "q"};
      break;
  }
  for (const auto& [k, v] : values) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
      throw std::invalid_argument("unknown parameter '" + k + "' for family " + std::string(family_tag(family)));
    }
  }
  for (const auto& k : keys) {
    if (!values.count(k)) throw std::invalid_argument("missing parameter '" + k + "'");
  }
  switch (family) {
    case Family::meixner:
      return make_meixner(values["beta"], values["c"]);
    case Family::little_q_jacobi:
      return make_little_q_jacobi(values["a"], values["b"], values["q"]);
    case Family::little_q_laguerre:
      return make_little_q_laguerre(values["a"], values["q"]);
  }
  return {};
}

long virtual_cap(const FamilyParams& p) { return p.is_q() ? 64 : 8; }

ordered_json rational_list(const std::vector<Rational>& values) {
  auto out = ordered_json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

SuiteResult from_report(const std::string& id, const std::string& ref, const Report& r) {
  SuiteResult s{id, ref, r.passed ? "pass" : "fail", static_cast<long>(r.checks), r.witnesses};
  return s;
}

Report base_suite(const RunConfig& c) {
  Report r("base");
  for (long n = 0; n <= c.n_max; ++n) r.absorb(verify_difference_equation(c.params, n, c.x_max));
  r.absorb(verify_shift_relations(c.params, c.n_max));
  r.absorb(verify_ground_state(c.params, c.x_max));
  r.absorb(verify_spectrum(c.params, c.n_max));
  r.absorb(verify_polynomial_coeffs(c.params, c.n_max));
  return r;
}

Report virtual_suite(const RunConfig& c) {
  Report r("virtual");
  r.absorb(verify_linear_relation(c.params, c.x_max));
  r.absorb(verify_virtual_energies(c.params, virtual_cap(c.params)));
  r.absorb(verify_nu_relation(c.params, c.x_max));
  for (long v : index_set(c.params, virtual_cap(c.params)).labels) {
    r.absorb(positivity_certificate(c.params, v));
    r.absorb(verify_twisted_equation(c.params, v, c.x_max));
    r.absorb(verify_infinite_norm(c.params, v, c.x_max));
  }
  return r;
}

Report chain_suite(const RunConfig& c) {
  Report r("chain");
  const auto& labels = c.deletion.labels;
  r.absorb(chain_verify(c.params, labels, c.n_max, c.x_max));
  r.absorb(chain_verify_signed(c.params, labels, std::min(c.n_max, 3L), std::min(c.x_max, 10L)));
  r.absorb(verify_order_independence(c.params, c.deletion, c.n_max, c.x_max));
  return r;
}

Report multi_suite(const RunConfig& c) {
  Report r("multi");
  const MultiIndexedSystem sys(c.params, c.deletion, c.n_max);
  r.absorb(verify_system(sys));
  r.absorb(verify_deformed_potentials(sys, c.x_max));
  r.absorb(verify_eigen_equation(sys, c.n_max, c.x_max));
  r.absorb(verify_shape_invariance(c.params, c.deletion, c.n_max, c.x_max));
  if (c.deletion.size() > 0) r.absorb(verify_special_identities(c.params, c.deletion, c.n_max));
  const long top = std::min(c.n_max, 3L);
  for (long n = 0; n <= top; ++n) {
    for (long m = n; m <= top; ++m) {
      const auto o = orthogonality_sum(sys, n, m, c.rel_tol);
      r.expect(o.passed, [&] {
        return "orthogonality n=" + std::to_string(n) + " m=" + std::to_string(m) + ": partial " +
               o.partial_sum.str() + " target " + o.target.str();
      });
    }
  }
  return r;
}

Report limits_suite(const RunConfig& c) {
  Report r("limits");
  const auto& labels = c.deletion.labels;
  if (!c.params.is_q()) {
    std::vector<std::vector<long>> sets;
    if (!labels.empty()) sets.push_back(labels);
    r.absorb(verify_meixner_limits(c.params.beta - Rational(1), std::min(c.n_max, 4L), 3, sets, std::min(c.n_max, 2L)));
    return r;
  }
  // q -> 1 runs at a = q^alpha along the sequence q_k; deformations need
  // alpha above every label
  const long top_label = labels.empty() ? 3 : std::max(3L, labels.back());
  const Rational alpha = Rational(top_label) + Rational(1, 2);
  const Rational beta(1, 3);
  std::vector<QLimitConfig> runs;
  for (long n = 0; n <= std::min(c.n_max, 3L); ++n) {
    runs.push_back({c.params.family, Rational(1, 2), beta, LimitSubject::polynomial, n, {}});
  }
  for (long v = 1; v <= 2; ++v) runs.push_back({c.params.family, alpha, beta, LimitSubject::virtual_polynomial, v, {}});
  if (!labels.empty()) runs.push_back({c.params.family, alpha, beta, LimitSubject::multi_indexed, 1, labels});
  for (const auto& cfg : runs) {
    const auto res = q_limit_numeric(cfg);
    r.expect(res.passed, [&] { return "q-limit degree " + std::to_string(cfg.degree) + ": " + res.detail; });
  }
  return r;
}

struct SuiteEntry {
  std::string id;
  std::string paper_ref;
  Report (*run)(const RunConfig&);
  bool needs_deletion;
};

const std::vector<SuiteEntry>& suite_entries() {
  static const std::vector<SuiteEntry> entries = {
      {"base", "difference equation, shift relations, Rodrigues formula, zero mode, spectrum", base_suite, false},
      {"virtual", "linear relation of potentials, virtual energies, positivity of virtual polynomials", virtual_suite,
       false},
      {"casoratian", "Casoratian gauge, two-column and complementary-minor identities", nullptr, false},
      {"chain", "Darboux-Crum chain identities, sign conditions, order independence", chain_suite, true},
      {"multi", "multi-indexed denominator, polynomials, eigen-equation, shape invariance, orthogonality", multi_suite,
       false},
      {"limits", "c->1 and q->1 reductions to Laguerre and Jacobi", limits_suite, false},
  };
  return entries;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

}  // namespace

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names = {"base", "virtual", "casoratian", "chain", "multi", "limits"};
  return names;
}

Rational parse_tolerance(const std::string& text) {
  static const std::regex sci(R"(\s*(\d+)[eE]-(\d+)\s*)");
  std::smatch m;
  Rational value;
  if (std::regex_match(text, m, sci)) {
    value = Rational::parse(m[1].str()) / pow(Rational(10), std::stol(m[2].str()));
  } else {
    value = Rational::parse(text);
  }
  if (value <= Rational(0)) throw std::invalid_argument("rtol must be positive");
  return value;
}

RunConfig parse_config(const RawConfig& raw) {
  RunConfig c;
  const Family family = parse_family(raw.family);
  c.params = parse_params(family, raw.params.empty() ? default_params(family) : raw.params);
  std::vector<long> labels;
  for (const auto& item : split(raw.deletions, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw std::invalid_argument("deletion label '" + item + "' is not an integer");
    labels.push_back(v);
  }
  c.deletion = make_deletion_set(c.params, labels, virtual_cap(c.params));
  if (raw.n_max < 0 || raw.n_max > 12) throw std::invalid_argument("nmax must lie in 0..12");
  if (raw.x_max < 0 || raw.x_max > 200) throw std::invalid_argument("xmax must lie in 0..200");
  c.n_max = raw.n_max;
  c.x_max = raw.x_max;
  c.rel_tol = parse_tolerance(raw.rel_tol);
  if (raw.format == "json") {
    c.format = Format::json;
  } else if (raw.format == "csv") {
    c.format = Format::csv;
  } else {
    throw std::invalid_argument("format must be json or csv");
  }
  if (!raw.suites.empty()) {
    c.suites.clear();
    for (const auto& name : all_suites()) {
      if (std::find(raw.suites.begin(), raw.suites.end(), name) != raw.suites.end()) c.suites.push_back(name);
    }
    for (const auto& s : raw.suites) {
      if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end()) {
        throw std::invalid_argument("unknown suite '" + s + "'");
      }
    }
  }
  c.out = raw.out;
  return c;
}

ordered_json config_json(const RunConfig& c) {
  ordered_json params;
  switch (c.params.family) {
    case Family::meixner:
      params["beta"] = c.params.beta.str();
      params["c"] = c.params.c.str();
      break;
    case Family::little_q_jacobi:
      params["a"] = c.params.a.str();
      params["b"] = c.params.b.str();
      params["q"] = c.params.q.str();
      break;
    case Family::little_q_laguerre:
      params["a"] = c.params.a.str();
      params["q"] = c.params.q.str();
      break;
  }
  ordered_json j;
  j["family"] = std::string(family_tag(c.params.family));
  j["params"] = params;
  j["deletions"] = c.deletion.labels;
  j["nmax"] = c.n_max;
  j["xmax"] = c.x_max;
  j["rtol"] = c.rel_tol.str();
  j["suites"] = c.suites;
  return j;
}

bool VerifyReport::passed() const {
  return std::none_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.status == "fail"; });
}

VerifyReport run_verify(const RunConfig& config) {
  VerifyReport report;
  report.config = config_json(config);
  for (const auto& entry : suite_entries()) {
    if (std::find(config.suites.begin(), config.suites.end(), entry.id) == config.suites.end()) continue;
    if (entry.needs_deletion && config.deletion.size() == 0) {
      report.suites.push_back({entry.id, entry.paper_ref, "skipped", 0, {"empty deletion set"}});
      continue;
    }
    Report r = entry.run ? entry.run(config) : verify_casoratian_identities(kCasoratianSeed, 100, 4, -5, 5);
    report.suites.push_back(from_report(entry.id, entry.paper_ref, r));
  }
  return report;
}

ordered_json to_json(const VerifyReport& report) {
  ordered_json j;
  j["schema"] = "mipoly.report/v1";
  j["config"] = report.config;
  j["suites"] = ordered_json::array();
  long passed = 0, failed = 0, skipped = 0, checks = 0;
  for (const auto& s : report.suites) {
    j["suites"].push_back({{"id", s.id},
                           {"paper_ref", s.paper_ref},
                           {"status", s.status},
                           {"checks", s.checks},
                           {"witnesses", s.witnesses}});
    passed += s.status == "pass";
    failed += s.status == "fail";
    skipped += s.status == "skipped";
    checks += s.checks;
  }
  j["summary"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped}, {"checks", checks},
                  {"status", failed == 0 ? "pass" : "fail"}};
  return j;
}

VerifyReport report_from_json(const ordered_json& j) {
  if (j.at("schema").get<std::string>() != "mipoly.report/v1") throw std::invalid_argument("unknown report schema");
  VerifyReport r;
  r.config = j.at("config");
  for (const auto& s : j.at("suites")) {
    r.suites.push_back({s.at("id").get<std::string>(), s.at("paper_ref").get<std::string>(),
                        s.at("status").get<std::string>(), s.at("checks").get<long>(),
                        s.at("witnesses").get<std::vector<std::string>>()});
  }
  return r;
}

std::string render(const VerifyReport& report, Format format) {
  if (format == Format::json) return to_json(report).dump(2) + "\n";
  std::ostringstream os;
  os << "id,paper_ref,status,checks,witnesses\n";
  for (const auto& s : report.suites) {
    std::string w;
    for (std::size_t i = 0; i < s.witnesses.size(); ++i) w += (i ? " | " : "") + s.witnesses[i];
    os << csv_field(s.id) << ',' << csv_field(s.paper_ref) << ',' << s.status << ',' << s.checks << ',' << csv_field(w)
       << '\n';
  }
  return os.str();
}

std::string tabulate(const RunConfig& config) {
  const MultiIndexedSystem sys(config.params, config.deletion, config.n_max);
  const auto& xi = sys.xi().coefficients();
  std::vector<ordered_json> rows;
  ordered_json polys = ordered_json::array();
  for (long n = 0; n <= config.n_max; ++n) {
    const auto d = dn_sq(config.params, n);
    polys.push_back({{"n", n},
                     {"coefficients", rational_list(sys.poly(n).coefficients())},
                     {"energy", energy(config.params, n).str()},
                     {"dn_sq", {{"value", d.value.str()}, {"radius", d.radius.str()}}},
                     {"dt_sq", sys.multi(n).dt_sq.str()}});
  }
  ordered_json weights = ordered_json::array();
  for (long x = 0; x <= config.x_max; ++x) weights.push_back({{"x", x}, {"w", sys.weight(x).str()}});

  if (config.format == Format::json) {
    ordered_json j;
    j["schema"] = "mipoly.table/v1";
    j["config"] = config_json(config);
    j["xi"] = {{"ell", sys.ell()}, {"coefficients", rational_list(xi)}};
    j["polynomials"] = polys;
    j["weights"] = weights;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "quantity,n,x,k,value\n";
  for (std::size_t k = 0; k < xi.size(); ++k) os << "xi,,," << k << ',' << xi[k] << '\n';
  for (const auto& p : polys) {
    const long n = p["n"];
    const auto& cs = p["coefficients"];
    for (std::size_t k = 0; k < cs.size(); ++k) os << "poly," << n << ",," << k << ',' << cs[k].get<std::string>() << '\n';
    os << "energy," << n << ",,," << p["energy"].get<std::string>() << '\n';
    os << "dn_sq," << n << ",,," << p["dn_sq"]["value"].get<std::string>() << '\n';
    os << "dn_sq_radius," << n << ",,," << p["dn_sq"]["radius"].get<std::string>() << '\n';
    os << "dt_sq," << n << ",,," << p["dt_sq"].get<std::string>() << '\n';
  }
  for (const auto& w : weights) os << "weight,," << w["x"].get<long>() << ",," << w["w"].get<std::string>() << '\n';
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of multi-indexed orthogonal polynomials"};
  app.require_subcommand(1);
  RawConfig raw;
  const auto add_flags = [&raw](CLI::App* sub) {
    sub->add_option("--family", raw.family, "M, lqJ or lqL")->capture_default_str();
    sub->add_option("--params", raw.params, "key=p/q list, e.g. beta=1,c=1/2");
    sub->add_option("--deletions", raw.deletions, "comma-separated virtual labels (empty for none)")->capture_default_str();
    sub->add_option("--nmax", raw.n_max, "highest degree")->capture_default_str();
    sub->add_option("--xmax", raw.x_max, "largest lattice point checked")->capture_default_str();
    sub->add_option("--rtol", raw.rel_tol, "relative tolerance for certified sums")->capture_default_str();
    sub->add_option("--suite", raw.suites, "base, virtual, casoratian, chain, multi, limits (default all)")->delimiter(',');
    sub->add_option("--format", raw.format, "json or csv")->capture_default_str();
    sub->add_option("--out", raw.out, "output file, - for stdout")->capture_default_str();
  };
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  CLI::App* tab = app.add_subcommand("tabulate", "emit coefficient and weight tables");
  add_flags(verify);
  add_flags(tab);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  RunConfig config;
  try {
    config = parse_config(raw);
  } catch (const std::exception& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return 2;
  }
  try {
    if (verify->parsed()) {
      const auto report = run_verify(config);
      write_output(config.out, render(report, config.format), out);
      return report.passed() ? 0 : 1;
    }
    write_output(config.out, tabulate(config), out);
    return 0;
  } catch (const ParameterError& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace mipoly::cli
