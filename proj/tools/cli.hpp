#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mipoly/multi_indexed.hpp"

namespace mipoly::cli {

enum class Format { json, csv };

/// Suite names accepted by --suite, in report order.
const std::vector<std::string>& all_suites();

/// Validated run configuration.
struct RunConfig {
  FamilyParams params;
  DeletionSet deletion;
  long n_max = 4;
  long x_max = 20;
  Rational rel_tol = decimal_epsilon(20);
  Format format = Format::json;
  std::vector<std::string> suites = all_suites();
  std::string out = "-";
};

/// Raw flag values before validation.
struct RawConfig {
  std::string family = "M";
  std::string params;  // empty: per-family default
  std::string deletions = "1";
  long n_max = 4;
  long x_max = 20;
  std::string rel_tol = "1e-20";
  std::vector<std::string> suites;
  std::string format = "json";
  std::string out = "-";
};

/// Throws ParameterError (out-of-range parameters, bad deletion sets) or
/// std::invalid_argument (malformed flags).
RunConfig parse_config(const RawConfig& raw);

/// "1e-20" or "p/q".
Rational parse_tolerance(const std::string& text);

nlohmann::ordered_json config_json(const RunConfig& config);

struct SuiteResult {
  std::string id;
  std::string paper_ref;  // descriptive name of the verified relation
  std::string status;     // "pass", "fail" or "skipped"
  long checks = 0;
  std::vector<std::string> witnesses;

  friend bool operator==(const SuiteResult&, const SuiteResult&) = default;
};

struct VerifyReport {
  nlohmann::ordered_json config;
  std::vector<SuiteResult> suites;

  bool passed() const;
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

VerifyReport run_verify(const RunConfig& config);

nlohmann::ordered_json to_json(const VerifyReport& report);
VerifyReport report_from_json(const nlohmann::ordered_json& j);
std::string render(const VerifyReport& report, Format format);

/// Coefficient and weight tables for the configured system.
std::string tabulate(const RunConfig& config);

/// Full command line: `mipoly verify|tabulate [flags]`. Returns the exit code
/// (0 success, 1 identity failure, 2 invalid configuration).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mipoly::cli
