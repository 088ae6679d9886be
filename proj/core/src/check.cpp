#include "comatrix/check.hpp"

namespace comatrix {

std::string CheckReport::summary() const {
  if (ok()) return "pass";
  const Violation& v = violations.front();
  return v.identity + " fails at " + v.witness;
}

}  // namespace comatrix
