#include "wald/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "wald/errors.hpp"

namespace wald {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

IntRows clear_denominators(const RatMatrix& m) {
  IntRows out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer& d = m(r, c).gmp().get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m(r, c).gmp();
      if (l == 1) {
        out[r][c] = q.get_num();
      } else {
        out[r][c] = l / q.get_den();
        out[r][c] *= q.get_num();
      }
    }
  }
  return out;
}

std::size_t pick_pivot(const IntRows& a, std::size_t from, std::size_t c) {
  std::size_t best = a.size();
  std::size_t best_size = 0;
  for (std::size_t i = from; i < a.size(); ++i) {
    if (sgn(a[i][c]) == 0) continue;
    std::size_t sz = mpz_sizeinbase(a[i][c].get_mpz_t(), 2);
    if (best == a.size() || sz < best_size) {
      best = i;
      best_size = sz;
    }
  }
  return best;
}

// a[i][j] <- (piv * a[i][j] - a[i][c] * a[r][j]) / prev for j >= from_col.
void bareiss_update(std::vector<Integer>& row, const std::vector<Integer>& prow, std::size_t c,
                    const Integer& prev, std::size_t from_col, Integer& tmp) {
  const Integer& piv = prow[c];
  const Integer factor = row[c];
  bool unit_prev = prev == 1;
  for (std::size_t j = from_col; j < row.size(); ++j) {
    if (j == c) continue;
    mpz_mul(tmp.get_mpz_t(), piv.get_mpz_t(), row[j].get_mpz_t());
    if (sgn(prow[j]) != 0 && sgn(factor) != 0) {
      mpz_submul(tmp.get_mpz_t(), factor.get_mpz_t(), prow[j].get_mpz_t());
    }
    if (unit_prev) {
      mpz_swap(row[j].get_mpz_t(), tmp.get_mpz_t());
    } else {
      mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
    }
  }
  row[c] = 0;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const Integer& z, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  RatMatrix m;
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero()) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

void RatMatrix::append_row(const RatVector& row) {
  if (rows_ == 0 && entries_.empty()) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

std::size_t rank_exact(const RatMatrix& m) {
  IntRows a = clear_denominators(m);
  Integer prev = 1, tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = pick_pivot(a, r, c);
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < a.size(); ++i) bareiss_update(a[i], a[r], c, prev, c, tmp);
    prev = a[r][c];
    ++r;
  }
  return r;
}

KernelProbe first_kernel_vector(const RatMatrix& m) {
  IntRows a = clear_denominators(m);
  Integer prev = 1, tmp;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = pick_pivot(a, r, c);
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < a.size(); ++i) bareiss_update(a[i], a[r], c, prev, c, tmp);
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  KernelProbe out{r, std::nullopt};
  if (r == m.cols()) return out;
  std::size_t f = 0;
  while (f < pivots.size() && pivots[f] == f) ++f;
  const Integer det = r == 0 ? Integer(1) : prev;
  std::vector<Integer> x(m.cols());
  x[f] = det;
  for (std::size_t i = r; i-- > 0;) {
    Integer acc = det * a[i][f];
    for (std::size_t j = i + 1; j < r; ++j) acc += a[i][pivots[j]] * x[pivots[j]];
    mpz_divexact(tmp.get_mpz_t(), acc.get_mpz_t(), a[i][pivots[i]].get_mpz_t());
    x[pivots[i]] = -tmp;
  }
  RatVector v(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) v[c] = Rational(x[c]);
  out.first = primitive_integer(v);
  return out;
}

RatVector primitive_integer(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) {
    Integer d = x.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Integer> z(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    z[i] = l / v[i].denominator() * v[i].numerator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  RatVector out(v.size());
  if (g == 0) return out;
  int s = 0;
  for (const auto& x : z)
    if (sgn(x) != 0) {
      s = sgn(x);
      break;
    }
  if (s < 0) g = -g;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(Integer(z[i] / g));
  return out;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  IntRows a = clear_denominators(m);
  Integer prev = 1, tmp;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = pick_pivot(a, r, c);
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r) continue;
      bareiss_update(a[i], a[r], c, prev, 0, tmp);
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = Rational(prev);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = Rational(Integer(-a[i][f]));
    basis.push_back(primitive_integer(v));
  }
  return basis;
}

std::size_t rank_modular(const RatMatrix& m, std::uint64_t p) {
  if (p < 2) throw BadPrimeError("modulus must be at least 2");
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m(r, c).gmp();
      std::uint64_t den = reduce(q.get_den(), p);
      if (den == 0) throw BadPrimeError("prime " + std::to_string(p) + " divides a denominator");
      a[r][c] = mulmod(reduce(q.get_num(), p), powmod(den, p - 2, p), p);
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    std::uint64_t inv = powmod(a[rank][c], p - 2, p);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = mulmod(a[i][c], inv, p);
      for (std::size_t j = c; j < m.cols(); ++j) {
        std::uint64_t sub = mulmod(f, a[rank][j], p);
        a[i][j] = a[i][j] >= sub ? a[i][j] - sub : a[i][j] + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_certified(const RatMatrix& m) {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0) return 0;
  try {
    if (rank_modular(m, kScreenPrime) == full) return full;
  } catch (const BadPrimeError&) {
  }
  return rank_exact(m);
}

}  // namespace wald
