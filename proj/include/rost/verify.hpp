#pragma once

#include "rost/graded_module.hpp"
#include "rost/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rost {

/// Parameters accepted by verify_theorem; unset values take per-id defaults.
struct VerifyParams {
  unsigned long p = 2;
  std::optional<int> n;
  std::optional<int> n1;
  std::optional<int> n2;
  std::optional<int> m;
  std::optional<int> s;
  std::optional<int> d;
  std::vector<int> di;
  std::vector<int> cdeg;
  /// lemma-7.2 input set: versal, product or none.
  std::string image = "versal";
  /// cor-1.3 factor family: rost or quadric.
  std::string family = "rost";
};

const std::vector<std::string>& theorem_ids();

/// Throws UsageError for unknown ids and out-of-range parameters.
TheoremReport verify_theorem(const std::string& id, const VerifyParams& params);

struct GridEntry {
  std::string id;
  VerifyParams params;
};

/// The default parameter grid run by verify-all, in report order.
std::vector<GridEntry> default_grid();

/// Runs the grid; reports come back in grid order whatever the policy.
std::vector<TheoremReport> verify_all(ExecPolicy policy = ExecPolicy::parallel);

/// Aggregate JSON for a verify-all run.
nlohmann::json verify_all_json(const std::vector<TheoremReport>& reports);

}  // namespace rost
