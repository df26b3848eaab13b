#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wald/geometry.hpp"
#include "wald/matrix.hpp"

namespace wald {

class FatPointScheme {
 public:
  FatPointScheme(std::vector<ProjPoint> points, std::vector<int> mults);
  static FatPointScheme uniform(std::vector<ProjPoint> points, int m);

  const std::vector<ProjPoint>& points() const { return points_; }
  const std::vector<int>& mults() const { return mults_; }
  std::size_t size() const { return points_.size(); }
  std::optional<int> uniform_mult() const;
  std::size_t condition_count() const;

 private:
  std::vector<ProjPoint> points_;
  std::vector<int> mults_;
};

struct AlphaResult {
  int m = 0;
  int alpha = 0;
  PlaneCurve witness;
  std::vector<std::pair<int, std::size_t>> h0_trace;
};

RatMatrix interpolation_matrix(const FatPointScheme& s, int d);
std::size_t ideal_dimension(const FatPointScheme& s, int d);
std::size_t hilbert_function(const FatPointScheme& s, int d);

// Smallest degree with a nonzero form vanishing to the prescribed orders.
// With a lower bound hint the search starts at ceil(hint * m) after checking
// that the degree just below is empty.
AlphaResult alpha(const FatPointScheme& s, std::optional<Rational> lower_hint = std::nullopt);

}  // namespace wald
