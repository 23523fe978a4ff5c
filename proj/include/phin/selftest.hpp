#pragma once

#include <string>
#include <vector>

#include "phin/field.hpp"

namespace phin {

struct SelfCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // exception text when a check threw
};

/// Invariant checks over built-in and seeded random cases.
std::vector<SelfCheck> run_selftest(Prime p);

}  // namespace phin
