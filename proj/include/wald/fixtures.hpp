#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wald/geometry.hpp"

namespace wald {

struct ExpectedValue {
  std::optional<Rational> exact;
  // Interval bounds; equal to exact when exact is set.
  Rational lower;
  std::optional<Rational> upper;

  static ExpectedValue exactly(const Rational& v) { return {v, v, v}; }
  static ExpectedValue between(const Rational& lo, std::optional<Rational> hi) { return {std::nullopt, lo, hi}; }
};

struct FixtureSpec {
  std::string name;
  std::vector<ProjPoint> points;
  std::optional<ExpectedValue> expected;
  std::string figure_ref;
  // Defining curve and generation trace, when the fixture has one.
  std::optional<PlaneCurve> curve;
  std::vector<std::string> trace;
};

// Throws UnknownFixtureError.
FixtureSpec fixture(const std::string& name);
const std::vector<std::string>& fixture_names();

// Rows of the line-plus-three table: 1 all collinear, 2 n-1 collinear,
// 3 n-2 collinear, 4 value 16/7, 5 value 7/3, 6 value 17/7, 7 value 5/2.
// Returns nullopt when the row has no instance with n points.
std::optional<FixtureSpec> table_row(int row, int n);

}  // namespace wald
