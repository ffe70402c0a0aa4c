#pragma once

#include <string>
#include <vector>

#include "modlat/group.hpp"
#include "modlat/verify.hpp"

namespace modlat {

struct SuiteSummary {
  /// hypothesis holds, conclusion holds
  std::size_t pass = 0;
  /// hypothesis holds or is vacuous, conclusion fails
  std::size_t fail = 0;
  /// hypothesis vacuous, conclusion holds
  std::size_t vacuous = 0;
  /// hypothesis fails
  std::size_t inapplicable = 0;

  friend bool operator==(const SuiteSummary&, const SuiteSummary&) = default;
};

struct SuiteResult {
  std::vector<VerdictReport> reports;
  SuiteSummary summary;

  bool sound() const noexcept { return summary.fail == 0; }
};

SuiteSummary summarize(const std::vector<VerdictReport>& reports);

/// "all" (the standard suite), "" (nothing), or a comma-separated list of
/// catalog names. Throws Errc::unknown_selector for a name construct() rejects.
std::vector<Group> select_groups(const std::string& catalog_selector,
                                 std::size_t max_order_cap = kDefaultMaxOrder);

/// Runs the selected checks over every group, `jobs` groups at a time.
/// Reports are ordered by group name, theorem id, then n, independent of
/// scheduling.
SuiteResult run_suite(const std::vector<Group>& groups, const std::string& theorem_selector,
                      unsigned jobs = 1, const VerifyOptions& opt = {});
SuiteResult run_suite(const std::string& catalog_selector, const std::string& theorem_selector,
                      unsigned jobs = 1, const VerifyOptions& opt = {});

}  // namespace modlat
