#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace borbit {

// Raised for malformed requests: bad flags, unparseable orbit strings,
// non-regular weights. Maps to exit code 2 in the CLI.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an enumeration would exceed the configured size budget.
// Maps to exit code 3.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationIssue {
  std::string axiom;    // "A1".."A8"
  std::string message;
  std::vector<std::vector<int>> roots;  // offending coefficient vectors
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Raised when input data fails validation, or when data that slipped past
// the necessary-condition axioms behaves inconsistently downstream (the
// cross-checked characterizations disagree). Maps to exit code 1.
struct validation_error : std::runtime_error {
  ValidationReport report;
  explicit validation_error(ValidationReport r, const std::string& what)
      : std::runtime_error(what), report(std::move(r)) {}
  explicit validation_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace borbit
