#include "modlat/suite.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "modlat/catalog.hpp"

namespace modlat {

SuiteSummary summarize(const std::vector<VerdictReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    if (r.violates())
      ++s.fail;
    else if (r.hypothesis == HypothesisStatus::fails)
      ++s.inapplicable;
    else if (r.hypothesis == HypothesisStatus::vacuous)
      ++s.vacuous;
    else
      ++s.pass;
  }
  return s;
}

std::vector<Group> select_groups(const std::string& catalog_selector, std::size_t max_order_cap) {
  std::vector<Group> groups;
  if (catalog_selector.empty()) return groups;
  if (catalog_selector == "all") {
    for (const auto& e : standard_suite())
      groups.push_back(construct(e.constructor, max_order_cap).renamed(e.name));
    return groups;
  }
  std::stringstream in(catalog_selector);
  std::string name;
  while (std::getline(in, name, ',')) {
    try {
      groups.push_back(construct(name, max_order_cap));
    } catch (const Error& e) {
      if (e.code() == Errc::closure_exceeds_cap) throw;
      throw Error(Errc::unknown_selector, "unknown catalog selector '" + name + "'");
    }
  }
  return groups;
}

SuiteResult run_suite(const std::vector<Group>& groups, const std::string& theorem_selector, unsigned jobs,
                      const VerifyOptions& opt) {
  const auto ids = theorem_ids(theorem_selector);
  SuiteResult result;
  if (ids.empty() || groups.empty()) return result;

  std::vector<std::vector<VerdictReport>> slots(groups.size());
  std::vector<std::exception_ptr> errors(groups.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < groups.size(); i = next++) {
      try {
        const GroupStudy study(groups[i]);
        slots[i] = verify_group(study, ids, opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n_workers = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(groups.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < n_workers; ++w) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (auto& s : slots) std::move(s.begin(), s.end(), std::back_inserter(result.reports));
  std::stable_sort(result.reports.begin(), result.reports.end(), [](const VerdictReport& a, const VerdictReport& b) {
    return std::tie(a.group_name, a.theorem_id, a.n) < std::tie(b.group_name, b.theorem_id, b.n);
  });
  result.summary = summarize(result.reports);
  return result;
}

SuiteResult run_suite(const std::string& catalog_selector, const std::string& theorem_selector, unsigned jobs,
                      const VerifyOptions& opt) {
  theorem_ids(theorem_selector);
  return run_suite(select_groups(catalog_selector), theorem_selector, jobs, opt);
}

}  // namespace modlat
