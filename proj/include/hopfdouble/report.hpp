#pragma once

#include <string>
#include <vector>

#include "hopfdouble/scalar.hpp"

namespace hopfdouble {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;  // empty on success
};

/// Ordered list of named pass/fail checks.
struct Report {
  std::vector<CheckResult> checks;

  void add(std::string name, bool passed, std::string witness = {}) {
    checks.push_back({std::move(name), passed, std::move(witness)});
  }
  void append(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.witness});
  }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Raised when a construction's mandatory verification fails.
class VerificationFailure : public Error {
 public:
  explicit VerificationFailure(Report report)
      : Error("check '" + report.first_failure()->name + "' failed" +
              (report.first_failure()->witness.empty() ? std::string() : " at " + report.first_failure()->witness)),
        report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

}  // namespace hopfdouble
