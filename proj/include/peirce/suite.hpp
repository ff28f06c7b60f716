#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace peirce {

struct SuiteOptions {
  std::uint64_t seed = 7;
  std::size_t cases = 200;  // checked cases per randomized suite
  std::size_t max_dim = 20;
  std::uint32_t p = 101;
  bool parallel = true;
};

struct SuiteReport {
  std::string name;
  std::string description;
  std::size_t cases = 0;    // checks that ran to a verdict
  std::size_t skipped = 0;  // samples outside the hypotheses
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty() && cases > 0; }
};

/// Randomized theorem suites followed by the tiny-corpus oracle suites.
const std::vector<std::string>& suite_names();
std::string suite_description(const std::string& name);

/// Throws Errc::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);
/// Every suite, sorted by name. Suites may run concurrently when
/// opt.parallel is set; each case owns a seed derived from (seed, suite, case).
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const SuiteOptions& opt);

}  // namespace peirce
