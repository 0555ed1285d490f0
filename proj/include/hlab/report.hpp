#pragma once

#include <string>
#include <vector>

namespace hlab {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // witness on failure, short summary otherwise
};

inline bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace hlab
