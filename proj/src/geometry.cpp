#include "wald/geometry.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "wald/errors.hpp"

namespace wald {

namespace {

std::vector<Integer> powers(const Integer& x, int d) {
  std::vector<Integer> p(static_cast<std::size_t>(d) + 1);
  p[0] = 1;
  for (int i = 1; i <= d; ++i) p[i] = p[i - 1] * x;
  return p;
}

void other_coords(int k, int& u, int& v) {
  u = k == 0 ? 1 : 0;
  v = k == 2 ? 1 : 2;
}

}  // namespace

const std::vector<Exponent>& monomials(int d) {
  static std::mutex mu;
  static std::map<int, std::vector<Exponent>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<Exponent> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return cache.emplace(d, std::move(out)).first->second;
}

std::size_t monomial_count(int d) { return static_cast<std::size_t>((d + 1) * (d + 2) / 2); }

std::size_t monomial_index(const Exponent& e) {
  int d = e[0] + e[1] + e[2];
  int a = e[0], b = e[1];
  // Monomials with x0-exponent > a come first: sum_{a'=a+1}^{d} (d-a'+1).
  int before = 0;
  for (int ap = d; ap > a; --ap) before += d - ap + 1;
  return static_cast<std::size_t>(before + (d - a - b));
}

ProjPoint::ProjPoint(Integer x0, Integer x1, Integer x2) : c_{std::move(x0), std::move(x1), std::move(x2)} {
  Integer g = 0;
  for (auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw ParseError("the zero triple is not a projective point");
  int s = 0;
  for (auto& x : c_)
    if (sgn(x) != 0) {
      s = sgn(x);
      break;
    }
  if (s < 0) g = -g;
  for (auto& x : c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

ProjPoint ProjPoint::from_rational(const Rational& x0, const Rational& x1, const Rational& x2) {
  RatVector v = primitive_integer({x0, x1, x2});
  return ProjPoint(v[0].numerator(), v[1].numerator(), v[2].numerator());
}

int ProjPoint::chart() const {
  for (int i = 0; i < 3; ++i)
    if (sgn(c_[i]) != 0) return i;
  return 0;
}

std::string ProjPoint::str() const {
  return "(" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + ")";
}

PlaneCurve::PlaneCurve(int degree, RatVector coeffs) : degree_(degree) {
  if (degree < 1) throw WrongDegreeError("curve degree must be positive");
  if (coeffs.size() != monomial_count(degree))
    throw ParseError("curve of degree " + std::to_string(degree) + " needs " +
                     std::to_string(monomial_count(degree)) + " coefficients");
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& r) { return r.is_zero(); }))
    throw ParseError("curve with all coefficients zero");
  coeffs_ = primitive_integer(coeffs);
}

Integer PlaneCurve::evaluate(const ProjPoint& p) const {
  auto p0 = powers(p[0], degree_), p1 = powers(p[1], degree_), p2 = powers(p[2], degree_);
  Integer s = 0;
  const auto& mons = monomials(degree_);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto& e = mons[i];
    s += coeffs_[i].numerator() * p0[e[0]] * p1[e[1]] * p2[e[2]];
  }
  return s;
}

std::string PlaneCurve::str() const {
  std::string out;
  const auto& mons = monomials(degree_);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    std::string c = coeffs_[i].str();
    std::string term;
    for (int v = 0; v < 3; ++v) {
      if (mons[i][v] == 0) continue;
      if (!term.empty()) term += "*";
      term += "x" + std::to_string(v);
      if (mons[i][v] > 1) term += "^" + std::to_string(mons[i][v]);
    }
    if (!out.empty()) out += (c[0] == '-') ? " - " : " + ";
    else if (c[0] == '-') out += "-";
    if (c[0] == '-') c.erase(0, 1);
    if (c != "1") out += c + (term.empty() ? "" : "*");
    else if (term.empty()) out += c;
    out += term;
  }
  return out;
}

PlaneCurve operator*(const PlaneCurve& f, const PlaneCurve& g) {
  int d = f.degree() + g.degree();
  RatVector out(monomial_count(d));
  const auto& mf = monomials(f.degree());
  const auto& mg = monomials(g.degree());
  for (std::size_t i = 0; i < mf.size(); ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < mg.size(); ++j) {
      if (g.coeffs()[j].is_zero()) continue;
      Exponent e{mf[i][0] + mg[j][0], mf[i][1] + mg[j][1], mf[i][2] + mg[j][2]};
      out[monomial_index(e)] += f.coeffs()[i] * g.coeffs()[j];
    }
  }
  return PlaneCurve(d, out);
}

PlaneCurve power(const PlaneCurve& f, int k) {
  if (k < 1) throw std::invalid_argument("power must be positive");
  PlaneCurve r = f;
  for (int i = 1; i < k; ++i) r = r * f;
  return r;
}

std::vector<Integer> derivative_row(const ProjPoint& p, int d, int a, int b) {
  int k = p.chart(), u, v;
  other_coords(k, u, v);
  auto pk = powers(p[k], d), pu = powers(p[u], d), pv = powers(p[v], d);
  const auto& mons = monomials(d);
  std::vector<Integer> row(mons.size());
  for (std::size_t i = 0; i < mons.size(); ++i) {
    const auto& e = mons[i];
    if (e[u] < a || e[v] < b) continue;
    Integer t = pk[e[k]] * pu[e[u] - a] * pv[e[v] - b];
    if (sgn(t) == 0) continue;
    if (a > 1) t *= binomial(e[u], a);
    else if (a == 1) t *= e[u];
    if (b > 1) t *= binomial(e[v], b);
    else if (b == 1) t *= e[v];
    row[i] = t;
  }
  return row;
}

std::size_t mult_at(const PlaneCurve& c, const ProjPoint& p) {
  for (int k = 0; k <= c.degree(); ++k) {
    for (int a = k; a >= 0; --a) {
      auto row = derivative_row(p, c.degree(), a, k - a);
      Integer s = 0;
      for (std::size_t i = 0; i < row.size(); ++i)
        if (sgn(row[i]) != 0 && !c.coeffs()[i].is_zero()) s += row[i] * c.coeffs()[i].numerator();
      if (sgn(s) != 0) return static_cast<std::size_t>(k);
    }
  }
  throw InternalError("nonzero form vanishing to order above its degree");
}

PlaneCurve line_through(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw IdenticalPointsError("line through identical points " + p.str());
  Integer a = p[1] * q[2] - p[2] * q[1];
  Integer b = p[2] * q[0] - p[0] * q[2];
  Integer c = p[0] * q[1] - p[1] * q[0];
  return PlaneCurve(1, {Rational(a), Rational(b), Rational(c)});
}

ProjPoint meet(const PlaneCurve& l1, const PlaneCurve& l2) {
  if (l1.degree() != 1 || l2.degree() != 1) throw WrongDegreeError("meet expects two lines");
  if (l1 == l2) throw IdenticalPointsError("meet of identical lines");
  const auto& u = l1.coeffs();
  const auto& v = l2.coeffs();
  return ProjPoint::from_rational(u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                  u[0] * v[1] - u[1] * v[0]);
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  Integer det = p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) +
                p[2] * (q[0] * r[1] - q[1] * r[0]);
  return sgn(det) == 0;
}

std::vector<PlaneCurve> curves_through(int d, const std::vector<ProjPoint>& pts,
                                       const std::vector<int>& mults) {
  RatMatrix m(0, monomial_count(d));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (int k = 0; k < mults[i]; ++k)
      for (int a = k; a >= 0; --a) {
        auto row = derivative_row(pts[i], d, a, k - a);
        m.append_row(RatVector(row.begin(), row.end()));
      }
  }
  std::vector<PlaneCurve> out;
  if (m.rows() == 0) {
    for (std::size_t i = 0; i < monomial_count(d); ++i) {
      RatVector v(monomial_count(d));
      v[i] = 1;
      out.emplace_back(d, v);
    }
    return out;
  }
  for (auto& v : nullspace(m)) out.emplace_back(d, v);
  return out;
}

PlaneCurve conic_through(const std::vector<ProjPoint>& pts) {
  if (pts.size() != 5) throw std::invalid_argument("conic_through expects five points");
  auto basis = curves_through(2, pts, std::vector<int>(5, 1));
  if (basis.size() != 1)
    throw NonUniqueConicError("the five points impose fewer than five conditions on conics");
  return basis.front();
}

bool is_irreducible_conic(const PlaneCurve& c) {
  if (c.degree() != 2) throw WrongDegreeError("expected a conic");
  const auto& k = c.coeffs();
  // 2 * symmetric matrix: [[2a, b, c], [b, 2d, e], [c, e, 2f]].
  Rational a = 2 * k[0], b = k[1], cc = k[2], d = 2 * k[3], e = k[4], f = 2 * k[5];
  Rational det = a * (d * f - e * e) - b * (b * f - e * cc) + cc * (b * e - d * cc);
  return !det.is_zero();
}

PlaneCurve cubic_with_double_point(const std::vector<ProjPoint>& simple, const ProjPoint& dbl) {
  if (simple.size() != 6) throw std::invalid_argument("cubic_with_double_point expects six simple points");
  std::vector<ProjPoint> all = simple;
  all.push_back(dbl);
  require_distinct(all);
  std::vector<int> mults(6, 1);
  mults.push_back(2);
  auto basis = curves_through(3, all, mults);
  if (basis.empty()) throw InternalError("9 conditions on cubics left no solution");
  const PlaneCurve& c = basis.front();
  for (const auto& p : simple)
    if (mult_at(c, p) < 1) throw InternalError("cubic misses a simple point");
  if (mult_at(c, dbl) < 2) throw InternalError("cubic is not singular at the double point");
  return c;
}

void require_distinct(const std::vector<ProjPoint>& pts) {
  std::set<ProjPoint> seen;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!seen.insert(pts[i]).second)
      throw DuplicatePointError("point " + std::to_string(i) + " " + pts[i].str() + " is repeated");
}

IncidenceProfile incidence_profile(const std::vector<ProjPoint>& pts, std::size_t conic_cap) {
  require_distinct(pts);
  IncidenceProfile prof;
  const std::size_t n = pts.size();
  prof.max_collinear = n == 0 ? 0 : 1;
  std::map<PlaneCurve, std::vector<std::size_t>> on_line;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      PlaneCurve l = line_through(pts[i], pts[j]);
      prof.pairwise_lines.emplace(std::make_pair(i, j), l);
      auto& members = on_line[l];
      if (members.empty())
        for (std::size_t k = 0; k < n; ++k)
          if (l.contains(pts[k])) members.push_back(k);
    }
  for (auto& [line, members] : on_line) {
    if (members.size() > prof.max_collinear) {
      prof.max_collinear = members.size();
      prof.max_line = line;
    }
    if (members.size() >= 3) prof.collinear_groups.push_back({members, line});
  }
  std::sort(prof.collinear_groups.begin(), prof.collinear_groups.end(),
            [](const PointGroup& a, const PointGroup& b) {
              if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
              return a.members < b.members;
            });
  if (prof.max_line && prof.max_collinear == 2) {
    prof.max_line = prof.pairwise_lines.begin()->second;
  }
  if (n > conic_cap) {
    prof.conics_enumerated = false;
    return prof;
  }
  std::vector<std::size_t> idx(5);
  auto covered = [&](const std::vector<std::size_t>& s) {
    for (const auto& g : prof.conic_subsets)
      if (std::includes(g.members.begin(), g.members.end(), s.begin(), s.end())) return true;
    return false;
  };
  for (idx[0] = 0; idx[0] < n; ++idx[0])
    for (idx[1] = idx[0] + 1; idx[1] < n; ++idx[1])
      for (idx[2] = idx[1] + 1; idx[2] < n; ++idx[2])
        for (idx[3] = idx[2] + 1; idx[3] < n; ++idx[3])
          for (idx[4] = idx[3] + 1; idx[4] < n; ++idx[4]) {
            bool general = true;
            for (int a = 0; a < 5 && general; ++a)
              for (int b = a + 1; b < 5 && general; ++b)
                for (int c = b + 1; c < 5 && general; ++c)
                  if (collinear(pts[idx[a]], pts[idx[b]], pts[idx[c]])) general = false;
            if (!general || covered(idx)) continue;
            std::vector<ProjPoint> five;
            for (auto i : idx) five.push_back(pts[i]);
            PlaneCurve c = conic_through(five);
            std::vector<std::size_t> members;
            for (std::size_t k = 0; k < n; ++k)
              if (c.contains(pts[k])) members.push_back(k);
            if (members.size() >= 6) prof.conic_subsets.push_back({members, c});
          }
  std::sort(prof.conic_subsets.begin(), prof.conic_subsets.end(),
            [](const PointGroup& a, const PointGroup& b) {
              if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
              return a.members < b.members;
            });
  return prof;
}

std::size_t concurrency_count_at(const ProjPoint& q, const std::vector<ProjPoint>& pts) {
  std::map<PlaneCurve, int> lines;
  for (const auto& p : pts) {
    if (p == q) throw std::invalid_argument("concurrency point belongs to the point set");
    ++lines[line_through(q, p)];
  }
  std::size_t count = 0;
  for (const auto& [l, k] : lines)
    if (k >= 2) ++count;
  return count;
}

std::vector<std::size_t> q_collinear_set(const std::vector<ProjPoint>& ps,
                                         const std::vector<ProjPoint>& qs) {
  if (qs.size() != 3) throw std::invalid_argument("q_collinear_set expects three vertices");
  if (qs[0] == qs[1] || qs[0] == qs[2] || qs[1] == qs[2] || collinear(qs[0], qs[1], qs[2]))
    throw CollinearVerticesError("triangle vertices are collinear");
  PlaneCurve sides[3] = {line_through(qs[1], qs[2]), line_through(qs[0], qs[2]),
                         line_through(qs[0], qs[1])};
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i] == qs[0] || ps[i] == qs[1] || ps[i] == qs[2]) continue;
    for (const auto& s : sides)
      if (s.contains(ps[i])) {
        out.push_back(i);
        break;
      }
  }
  return out;
}

Rational determinant(const Mat3& t) {
  return t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) -
         t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0]) +
         t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0]);
}

Mat3 inverse(const Mat3& t) {
  Rational det = determinant(t);
  if (det.is_zero()) throw std::invalid_argument("singular coordinate change");
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = (t[r0][c0] * t[r1][c1] - t[r0][c1] * t[r1][c0]) / det;
    }
  return r;
}

ProjPoint transform(const Mat3& t, const ProjPoint& p) {
  Rational y[3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) y[i] += t[i][j] * Rational(p[j]);
  return ProjPoint::from_rational(y[0], y[1], y[2]);
}

PlaneCurve transform(const Mat3& t, const PlaneCurve& c) {
  Mat3 inv = inverse(t);
  // Substitute x_i -> sum_j inv[i][j] x_j.
  std::vector<RatVector> lin(3, RatVector(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) lin[i][j] = inv[i][j];
  auto mul = [](const RatVector& f, int df, const RatVector& g, int dg) {
    RatVector out(monomial_count(df + dg));
    const auto& mf = monomials(df);
    const auto& mg = monomials(dg);
    for (std::size_t i = 0; i < mf.size(); ++i) {
      if (f[i].is_zero()) continue;
      for (std::size_t j = 0; j < mg.size(); ++j) {
        if (g[j].is_zero()) continue;
        Exponent e{mf[i][0] + mg[j][0], mf[i][1] + mg[j][1], mf[i][2] + mg[j][2]};
        out[monomial_index(e)] += f[i] * g[j];
      }
    }
    return out;
  };
  const int d = c.degree();
  // pw[i][k] = (lin_i)^k as a degree-k form.
  std::vector<std::vector<RatVector>> pw(3);
  for (int i = 0; i < 3; ++i) {
    pw[i].push_back(RatVector{Rational(1)});
    for (int k = 1; k <= d; ++k) pw[i].push_back(k == 1 ? lin[i] : mul(pw[i][k - 1], k - 1, lin[i], 1));
  }
  RatVector out(monomial_count(d));
  const auto& mons = monomials(d);
  for (std::size_t m = 0; m < mons.size(); ++m) {
    if (c.coeffs()[m].is_zero()) continue;
    const auto& e = mons[m];
    RatVector term = mul(mul(pw[0][e[0]], e[0], pw[1][e[1]], e[1]), e[0] + e[1], pw[2][e[2]], e[2]);
    for (std::size_t k = 0; k < term.size(); ++k)
      if (!term[k].is_zero()) out[k] += c.coeffs()[m] * term[k];
  }
  return PlaneCurve(d, out);
}

}  // namespace wald
