#include <array>

#include "wald/errors.hpp"
#include "wald/geometry.hpp"
#include "wald/unipoly.hpp"

namespace wald {

namespace {

using Quad = std::array<UniPoly, 3>;  // coefficients of z^0, z^1, z^2


// Partial derivative of a cubic with respect to x_var, as a quadratic form.
RatVector partial(const PlaneCurve& f, int var) {
  RatVector out(monomial_count(2));
  const auto& mons = monomials(3);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    Exponent e = mons[i];
    if (e[var] == 0 || f.coeffs()[i].is_zero()) continue;
    Rational c = f.coeffs()[i] * e[var];
    --e[var];
    out[monomial_index(e)] += c;
  }
  return out;
}

// q(x, 1, z) as a polynomial in z with coefficients in Q[x].
Quad chart_y(const RatVector& q) {
  Quad out;
  const auto& mons = monomials(2);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (q[i].is_zero()) continue;
    std::vector<Rational> c(static_cast<std::size_t>(mons[i][0]) + 1);
    c[mons[i][0]] = q[i];
    out[mons[i][2]] = out[mons[i][2]] + UniPoly(c);
  }
  return out;
}

UniPoly resultant(const Quad& a, const Quad& b) {
  UniPoly u = a[2] * b[0] - a[0] * b[2];
  UniPoly v = a[2] * b[1] - a[1] * b[2];
  UniPoly w = a[1] * b[0] - a[0] * b[1];
  return u * u - v * w;
}

// True when the three quadratic forms have no common zero in P^2.
bool no_common_zero(const std::array<RatVector, 3>& q) {
  std::array<Quad, 3> g{chart_y(q[0]), chart_y(q[1]), chart_y(q[2])};
  UniPoly acc;
  bool any = false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      UniPoly r = resultant(g[i], g[j]);
      if (r.is_zero()) continue;
      acc = any ? gcd(acc, r) : r;
      any = true;
    }
  if (!any || acc.degree() > 0) return false;
  // Line x1 = 0 with x0 = 1: q(1, 0, z).
  UniPoly h;
  bool any_h = false;
  const auto& mons = monomials(2);
  for (const auto& form : q) {
    std::vector<Rational> c(3);
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (mons[i][1] == 0) c[mons[i][2]] += form[i];
    UniPoly p(c);
    if (p.is_zero()) continue;
    h = any_h ? gcd(h, p) : p;
    any_h = true;
  }
  if (!any_h || h.degree() > 0) return false;
  // The point (0:0:1).
  std::size_t z2 = monomial_index({0, 0, 2});
  return !q[0][z2].is_zero() || !q[1][z2].is_zero() || !q[2][z2].is_zero();
}

}  // namespace

bool is_smooth_cubic(const PlaneCurve& c) {
  if (c.degree() != 3) throw WrongDegreeError("expected a cubic");
  static const std::array<Mat3, 4> shears = {{
      {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
      {{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}},
      {{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}},
      {{{1, 2, 0}, {3, 1, 1}, {1, 0, 1}}},
  }};
  for (const auto& t : shears) {
    PlaneCurve f = transform(t, c);
    if (no_common_zero({partial(f, 0), partial(f, 1), partial(f, 2)})) return true;
  }
  return false;
}

}  // namespace wald
