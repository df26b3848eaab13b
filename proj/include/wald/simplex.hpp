#pragma once

#include "wald/matrix.hpp"

namespace wald {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  RatVector x;
  Rational value;
  // Row multipliers: an optimal solution of min b.y subject to A^T y >= c.
  RatVector duals;
  std::size_t pivots = 0;
};

// maximize c.x subject to A x = b, x >= 0. Two-phase tableau simplex over
// the rationals with Bland's rule.
LpResult maximize(const RatMatrix& a, const RatVector& b, const RatVector& c);

}  // namespace wald
