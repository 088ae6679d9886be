#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace comatrix {

struct Violation {
  std::string identity;
  std::string witness;
};

/// Outcome of an axiom check: empty `violations` means pass.
struct CheckReport {
  std::string subject;
  std::vector<Violation> violations;
  /// Number of individual identities evaluated.
  std::size_t checked = 0;

  bool ok() const { return violations.empty(); }
  void fail(std::string identity, std::string witness) {
    violations.push_back({std::move(identity), std::move(witness)});
  }
  void merge(const CheckReport& other) {
    checked += other.checked;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
  /// "pass" or the first violation.
  std::string summary() const;
};

}  // namespace comatrix
