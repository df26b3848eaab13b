#pragma once

// Test-side reference computations that share no code with the library's
// elimination, derivative and simplex routines.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "wald/bezout_lp.hpp"
#include "wald/geometry.hpp"
#include "wald/matrix.hpp"

namespace oracle {

using wald::Integer;
using wald::Rational;
using wald::RatVector;

// Plain Gaussian elimination over Q, columns scanned right to left and rows
// bottom to top.
inline std::size_t naive_rank(const wald::RatMatrix& m) {
  std::vector<RatVector> a;
  for (std::size_t r = m.rows(); r-- > 0;) a.push_back(m.row(r));
  std::size_t rank = 0;
  for (std::size_t c = m.cols(); c-- > 0 && rank < a.size();) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][c].is_zero()) continue;
      Rational f = a[i][c] / a[rank][c];
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Value at p of the partial derivative d^i0 d^i1 d^i2 of the degree-d form
// with coefficient vector f.
inline Integer partial_at(const RatVector& f, int d, const std::array<int, 3>& ord, const wald::ProjPoint& p) {
  Integer total = 0;
  const auto& mons = wald::monomials(d);
  for (std::size_t k = 0; k < mons.size(); ++k) {
    if (f[k].is_zero()) continue;
    Integer term = f[k].numerator();
    bool zero = false;
    for (int v = 0; v < 3 && !zero; ++v) {
      int e = mons[k][v];
      if (e < ord[v]) {
        zero = true;
        break;
      }
      for (int s = 0; s < ord[v]; ++s) term *= e - s;
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), p[v].get_mpz_t(), e - ord[v]);
      term *= pw;
    }
    if (!zero) total += term;
  }
  return total;
}

// All C(k+2, 2) partials of every order k < m, not just one chart's worth.
inline wald::RatMatrix full_condition_matrix(const std::vector<wald::ProjPoint>& pts, int m, int d) {
  const std::size_t cols = wald::monomial_count(d);
  wald::RatMatrix out;
  for (const auto& p : pts)
    for (int k = 0; k < m; ++k)
      for (int a = k; a >= 0; --a)
        for (int b = k - a; b >= 0; --b) {
          RatVector row(cols);
          for (std::size_t c = 0; c < cols; ++c) {
            RatVector unit(cols);
            unit[c] = Rational(1);
            row[c] = Rational(partial_at(unit, d, {a, b, k - a - b}, p));
          }
          out.append_row(row);
        }
  return out;
}

inline std::size_t brute_mult(const wald::PlaneCurve& c, const wald::ProjPoint& p) {
  for (int k = 0; k <= c.degree(); ++k)
    for (int a = k; a >= 0; --a)
      for (int b = k - a; b >= 0; --b)
        if (partial_at(c.coeffs(), c.degree(), {a, b, k - a - b}, p) != 0) return static_cast<std::size_t>(k);
  return static_cast<std::size_t>(c.degree() + 1);
}

inline int brute_alpha(const std::vector<wald::ProjPoint>& pts, int m) {
  for (int d = 1;; ++d) {
    auto mat = full_condition_matrix(pts, m, d);
    if (naive_rank(mat) < wald::monomial_count(d)) return d;
  }
}

// Solves the square system A x = b by Gaussian elimination; nullopt when
// singular.
inline std::optional<RatVector> solve_square(std::vector<RatVector> a, RatVector b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Minimum of t over {coeffs . x >= rhs, a_j >= 0} by enumerating every
// basis of active constraints. Only for tiny systems.
inline std::optional<Rational> vertex_min(const wald::BezoutSystem& sys) {
  const std::size_t nv = sys.variables.size();
  std::vector<RatVector> rows;
  RatVector rhs;
  for (const auto& c : sys.constraints) {
    rows.push_back(c.coeffs);
    rhs.push_back(c.rhs);
  }
  for (std::size_t j = 1; j < nv; ++j) {
    RatVector e(nv);
    e[j] = Rational(1);
    rows.push_back(e);
    rhs.push_back(Rational(0));
  }
  const std::size_t nr = rows.size();
  std::optional<Rational> best;
  std::vector<std::size_t> pick(nv);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == nv) {
      std::vector<RatVector> a;
      RatVector b;
      for (auto i : pick) {
        a.push_back(rows[i]);
        b.push_back(rhs[i]);
      }
      auto x = solve_square(a, b);
      if (!x) return;
      for (std::size_t i = 0; i < nr; ++i) {
        Rational s;
        for (std::size_t j = 0; j < nv; ++j) s += rows[i][j] * (*x)[j];
        if (s < rhs[i]) return;
      }
      if (!best || (*x)[0] < *best) best = (*x)[0];
      return;
    }
    for (std::size_t i = start; i < nr; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace oracle
