#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mipoly {

/// Invalid parameters or deletion sets. The message names the violated
/// condition, e.g. "meixner requires 0<c<1".
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Outcome of one verification: how many exact checks ran, whether all held,
/// and a bounded list of human-readable counterexamples.
struct Report {
  static constexpr std::size_t kMaxWitnesses = 16;

  std::string id;
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> witnesses;

  Report() = default;
  explicit Report(std::string name) : id(std::move(name)) {}

  /// Records one check; `describe` is only invoked on failure.
  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    ++checks;
    if (!ok) fail(std::forward<Describe>(describe)());
    return ok;
  }

  void fail(std::string witness) {
    passed = false;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
  }

  /// Folds another report in, prefixing its witnesses with its id.
  void absorb(const Report& other) {
    checks += other.checks;
    if (!other.passed) passed = false;
    for (const auto& w : other.witnesses) {
      if (witnesses.size() >= kMaxWitnesses) break;
      witnesses.push_back(other.id.empty() ? w : other.id + ": " + w);
    }
  }
};

}  // namespace mipoly
