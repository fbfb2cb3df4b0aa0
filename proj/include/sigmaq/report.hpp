#pragma once

#include <string>
#include <vector>

namespace sigmaq {

/// One verified identity: a label, the verdict, and on failure a witness
/// (coordinates plus the two offending entries, rendered).
struct CheckResult {
  std::string label;
  bool pass = false;
  int row = -1;
  int col = -1;
  std::string lhs;
  std::string rhs;
};

struct Report {
  int k = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace sigmaq
