#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mqhahn {

// One verified identity or condition. `detail` is empty on success; on
// failure it carries the exact operands needed to reproduce the check.
struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string suite, std::string name, bool passed, std::string detail = "") {
    checks.push_back({std::move(suite), std::move(name), passed, std::move(detail)});
  }

  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  std::size_t failed_count() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (!c.passed) ++n;
    return n;
  }
};

}  // namespace mqhahn
