#pragma once

#include <optional>
#include <string>
#include <vector>

#include "comatrix/endo.hpp"

namespace comatrix {

/// A named expected quantity together with the oracle that derives it.
struct Expectation {
  std::string quantity;
  std::string value;
  std::string oracle;
};

struct Fixture {
  std::string name;
  AlgebraPtr a;
  AlgebraPtr b;
  /// (B, A)-bimodule
  Bimodule sigma;
  /// Preferred dual basis; the greedy one is used when absent.
  std::optional<DualBasis> basis;
  std::vector<Expectation> expected;

  const Field& field() const { return a->field(); }
  FramedBimodule framed() const { return frame(sigma, basis); }
  /// Value of the named expectation; throws InvalidStructure when missing.
  const std::string& expect(const std::string& quantity) const;
};

/// A = B = F_2, Sigma = F_2^2, S = M_2(F_2).
Fixture fixture_ex_free();
/// B = diagonal in S = M_2(F_2), Sigma = S_S, C = S (x)_B S.
Fixture fixture_ex_sweedler();
/// B = F_2 in A = S = F_2 x F_2, Sigma = A.
Fixture fixture_ex_sep();
std::vector<Fixture> all_fixtures();
/// Lookup by name (EX-FREE, EX-SWEEDLER, EX-SEP); nullopt when unknown.
std::optional<Fixture> fixture_by_name(const std::string& name);

/// Recomputes one expectation with its brute-force oracle. The oracles use
/// their own elimination over F_p and never call the library's linear algebra.
std::string run_oracle(const Fixture& fx, const std::string& oracle);

/// Re-runs every oracle of the fixture and compares with the stored values.
CheckReport reseed_check(const Fixture& fx);

}  // namespace comatrix
