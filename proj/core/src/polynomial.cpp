#include "mipoly/polynomial.hpp"

namespace mipoly {

std::vector<std::string> coefficient_strings(const EtaPolynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  if (out.empty()) out.emplace_back("0");
  return out;
}

}  // namespace mipoly
