#pragma once

// The ten acceptance criteria as executable checks.  Each criterion draws from
// its own generator seeded with seed + id, so criteria are independent of the
// order in which they run.

#include "qonkit/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qonkit {

inline constexpr int kCriterionCount = 10;

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  Json data = Json::object();
  std::vector<std::string> notes;
  double seconds = 0.0;  // wall time; never written to JSON

  bool pass() const;
};

/// id in [1, kCriterionCount]; throws DomainError otherwise.
CriterionResult run_criterion(int id, std::uint64_t seed = 1);

/// The listed criteria; checks are prefixed "cN." and data is keyed "cN".
Report run_acceptance(const std::vector<int>& ids, std::uint64_t seed = 1);
Report run_all_acceptance(std::uint64_t seed = 1);

}  // namespace qonkit
