#include "wald/simplex.hpp"

#include "wald/errors.hpp"

namespace wald {

namespace {

class Tableau {
 public:
  Tableau(const RatMatrix& a, const RatVector& b) : m_(a.rows()), n_(a.cols()), flip_(m_, false) {
    t_.assign(m_, RatVector(n_ + m_ + 1));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      flip_[i] = b[i].sign() < 0;
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip_[i] ? -a(i, j) : a(i, j);
      t_[i][n_ + i] = 1;
      t_[i][n_ + m_] = flip_[i] ? -b[i] : b[i];
      basis_[i] = n_ + i;
    }
  }

  // Returns false when the objective is unbounded over the allowed columns.
  bool optimize(const RatVector& cost, std::size_t allowed, std::size_t& pivots) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (is_basic(j)) continue;
        Rational r = cost[j];
        for (std::size_t i = 0; i < m_; ++i)
          if (!t_[i][j].is_zero()) r -= cost[basis_[i]] * t_[i][j];
        if (r.sign() > 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter].sign() <= 0) continue;
        Rational ratio = t_[i][n_ + m_] / t_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
      ++pivots;
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = t_[r][c];
    for (auto& x : t_[r])
      if (!x.is_zero()) x /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_[i][c].is_zero()) continue;
      Rational f = t_[i][c];
      for (std::size_t j = 0; j < t_[i].size(); ++j)
        if (!t_[r][j].is_zero()) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  // Replace basic artificials by original columns where possible.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!t_[i][j].is_zero() && !is_basic(j)) {
          pivot(i, j);
          break;
        }
    }
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  Rational objective(const RatVector& cost) const {
    Rational v;
    for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * t_[i][n_ + m_];
    return v;
  }

  RatVector solution() const {
    RatVector x(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = t_[i][n_ + m_];
    return x;
  }

  RatVector duals(const RatVector& cost) const {
    RatVector y(m_);
    for (std::size_t k = 0; k < m_; ++k) {
      Rational s;
      for (std::size_t i = 0; i < m_; ++i)
        if (!t_[i][n_ + k].is_zero()) s += cost[basis_[i]] * t_[i][n_ + k];
      y[k] = flip_[k] ? -s : s;
    }
    return y;
  }

 private:
  std::size_t m_, n_;
  std::vector<bool> flip_;
  std::vector<RatVector> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult maximize(const RatMatrix& a, const RatVector& b, const RatVector& c) {
  if (b.size() != a.rows() || c.size() != a.cols()) throw std::invalid_argument("LP dimension mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  LpResult res;
  Tableau tab(a, b);
  RatVector phase1(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  if (!tab.optimize(phase1, n + m, res.pivots)) throw InternalError("phase one cannot be unbounded");
  if (tab.objective(phase1).sign() < 0) {
    res.status = LpStatus::infeasible;
    return res;
  }
  tab.drive_out_artificials();
  RatVector phase2(n + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (!tab.optimize(phase2, n, res.pivots)) {
    res.status = LpStatus::unbounded;
    return res;
  }
  res.status = LpStatus::optimal;
  res.x = tab.solution();
  res.value = tab.objective(phase2);
  res.duals = tab.duals(phase2);
  return res;
}

}  // namespace wald
