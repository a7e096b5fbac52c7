#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace relexp {

struct VerifyOptions {
  int max_n = 5;
  double route_tol = 1e-9;  // tolerance of the route-agreement check
  std::uint64_t seed = 20240917;
};

struct CheckResult {
  std::string name;
  double tol = 0.0;
  double worst = 0.0;
  long cases = 0;
  std::string where;  // location of the worst case, or the error that aborted the check

  bool passed() const { return worst <= tol; }
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;

  bool passed() const;
};

// Each suite compares against tolerances pinned per check.
SuiteResult verify_specfun(std::uint64_t seed);
SuiteResult verify_normalization(int max_n);
SuiteResult verify_route_agreement(int max_n, double tol);
SuiteResult verify_laguerre();
SuiteResult verify_vk_oracle(int max_n);
SuiteResult verify_nr_limit(int max_n);

std::vector<SuiteResult> run_verification(const VerifyOptions& opts);

}  // namespace relexp
