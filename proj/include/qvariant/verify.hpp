#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qvariant/json_io.hpp"

namespace qvariant {

struct VerifyConfig {
  Mode mode = Mode::exact;
  std::string p = "1/2";
  int N = 12;
  std::uint64_t seed = 1;
  int draws = 10;
  double tol = 1e-10;
  std::vector<double> epsilons{1e-1, 1e-2, 1e-3};
  bool parallel = true;
};

struct VerifyReport {
  std::string target;
  int draws = 0;
  int passed = 0;
  std::vector<json> records;  // one per draw, ordered by index
  json summary;
  bool ok() const { return passed == draws; }
  json to_json() const;
};

// thm1 thm2 thm3 conj3 appell-a2 appell-a6 prop31 limits ode exponents
const std::vector<std::string>& verify_targets();
VerifyReport run_verify(const std::string& target, const VerifyConfig& cfg);

}  // namespace qvariant
