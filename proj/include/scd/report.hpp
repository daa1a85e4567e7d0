#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace scd {

/// Outcome of one named check. Informational checks are reported but never
/// decide the overall verdict.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  bool informational = false;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;  // first few counterexamples
  std::string note;
  double seconds = 0;

  static constexpr std::size_t max_failures = 8;

  void fail(const std::string& what) {
    passed = false;
    if (failures.size() < max_failures) failures.push_back(what);
  }
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) fail(what);
  }
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.informational && !c.passed) return false;
    return true;
  }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

}  // namespace scd
