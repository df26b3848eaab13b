#include "wald/fat_points.hpp"

#include <algorithm>

#include "wald/errors.hpp"

namespace wald {

FatPointScheme::FatPointScheme(std::vector<ProjPoint> points, std::vector<int> mults)
    : points_(std::move(points)), mults_(std::move(mults)) {
  if (points_.size() != mults_.size()) throw std::invalid_argument("points and mults differ in length");
  for (int m : mults_)
    if (m < 1) throw ParseError("multiplicities must be positive");
  require_distinct(points_);
}

FatPointScheme FatPointScheme::uniform(std::vector<ProjPoint> points, int m) {
  std::vector<int> mults(points.size(), m);
  return FatPointScheme(std::move(points), std::move(mults));
}

std::optional<int> FatPointScheme::uniform_mult() const {
  if (mults_.empty()) return std::nullopt;
  for (int m : mults_)
    if (m != mults_.front()) return std::nullopt;
  return mults_.front();
}

std::size_t FatPointScheme::condition_count() const {
  std::size_t s = 0;
  for (int m : mults_) s += static_cast<std::size_t>(m) * (m + 1) / 2;
  return s;
}

RatMatrix interpolation_matrix(const FatPointScheme& s, int d) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  const std::size_t cols = monomial_count(d);
  std::vector<Rational> entries;
  entries.reserve(s.condition_count() * cols);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (int k = 0; k < s.mults()[i]; ++k)
      for (int a = k; a >= 0; --a)
        for (auto& x : derivative_row(s.points()[i], d, a, k - a)) entries.emplace_back(x);
  return RatMatrix(s.condition_count(), cols, std::move(entries));
}

std::size_t hilbert_function(const FatPointScheme& s, int d) {
  return rank_certified(interpolation_matrix(s, d));
}

std::size_t ideal_dimension(const FatPointScheme& s, int d) {
  return monomial_count(d) - hilbert_function(s, d);
}

AlphaResult alpha(const FatPointScheme& s, std::optional<Rational> lower_hint) {
  if (s.size() == 0) throw std::invalid_argument("alpha of an empty scheme");
  int m = *std::max_element(s.mults().begin(), s.mults().end());
  long msum = 0;
  for (int k : s.mults()) msum += k;
  const int cap = static_cast<int>(3 * msum);
  AlphaResult res{m, 0, PlaneCurve(1, {1, 0, 0}), {}};
  if (auto u = s.uniform_mult()) res.m = *u;
  int start = 1;
  if (lower_hint && lower_hint->sign() > 0) {
    Integer c = (*lower_hint * Rational(res.m)).ceil();
    start = std::max(1, static_cast<int>(c.get_si()));
    if (start > 1) {
      std::size_t below = ideal_dimension(s, start - 1);
      res.h0_trace.emplace_back(start - 1, below);
      if (below > 0) {
        res.h0_trace.clear();
        start = 1;
      }
    }
  }
  for (int d = start; d <= cap; ++d) {
    RatMatrix mat = interpolation_matrix(s, d);
    const std::size_t cols = monomial_count(d);
    if (mat.rows() >= cols && rank_modular(mat, kScreenPrime) == cols) {
      res.h0_trace.emplace_back(d, 0);
      continue;
    }
    KernelProbe probe = first_kernel_vector(mat);
    res.h0_trace.emplace_back(d, cols - probe.rank);
    if (!probe.first) continue;
    res.alpha = d;
    res.witness = PlaneCurve(d, *probe.first);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (mult_at(res.witness, s.points()[i]) < static_cast<std::size_t>(s.mults()[i]))
        throw InternalError("alpha witness fails a multiplicity condition");
    return res;
  }
  throw InternalError("alpha search exceeded the degree cap");
}

}  // namespace wald
