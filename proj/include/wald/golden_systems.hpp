#pragma once

#include <string>
#include <vector>

#include "wald/bezout_lp.hpp"

namespace wald {

// Hand-written inequality systems for the named configuration families,
// with integer multipliers that eliminate every decomposition variable.
struct GoldenSystem {
  std::string name;
  BezoutSystem system;
  RatVector multipliers;
  // Bound obtained from the multipliers.
  Rational bound;
  // True when the multipliers are optimal for the system as written.
  bool tight;
};

const std::vector<GoldenSystem>& golden_systems();
const GoldenSystem& golden_system(const std::string& name);

}  // namespace wald
