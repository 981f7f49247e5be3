#pragma once

#include <map>
#include <string>
#include <vector>

#include "nsenum/census.hpp"

namespace nsenum {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  unsigned threads = 1;
  /// Also run the n = 5 census (minutes to hours).
  bool stretch = false;
};

/// Runs the numbered acceptance checks. Census data is computed once and
/// shared between the checks that need it.
class Verifier {
 public:
  static constexpr int kCriteria = 10;

  explicit Verifier(VerifyOptions options = {}) : options_(options) {}

  CheckResult run(int criterion);
  std::vector<CheckResult> run_suite(const std::string& suite);

  /// Suite names in a fixed order, and the criteria each one runs.
  static const std::vector<std::string>& suites();
  static std::vector<int> suite_criteria(const std::string& suite);

 private:
  struct CensusEntry {
    Census census;
    double seconds = 0.0;
  };
  const CensusEntry& census(int n);
  int max_census() const { return options_.stretch ? 5 : 4; }

  CheckResult four_block_profiles();
  CheckResult constrained_block();
  CheckResult pathological_sigma();
  CheckResult pathological_structure();
  CheckResult census_counts();
  CheckResult census_statistics();
  CheckResult conjectures();
  CheckResult bound_suite();
  CheckResult oracle_equivalence();
  CheckResult determinism();

  VerifyOptions options_;
  std::map<int, CensusEntry> census_;
};

/// One line: "[PASS] <criterion>. <name>: <detail> (<seconds>s)".
std::string format_check(const CheckResult& r);

}  // namespace nsenum
