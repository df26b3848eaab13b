#include "wald/bezout_lp.hpp"

#include <algorithm>
#include <map>

#include "wald/errors.hpp"
#include "wald/simplex.hpp"

namespace wald {

std::string to_string(CurveStatus s) {
  switch (s) {
    case CurveStatus::verified: return "verified";
    case CurveStatus::attested: return "attested";
    case CurveStatus::unknown: return "unknown";
  }
  return "unknown";
}

AuxCurveSet::AuxCurveSet(std::vector<ProjPoint> points) : points_(std::move(points)) {
  require_distinct(points_);
}

const AuxCurve& AuxCurveSet::add(const PlaneCurve& c, bool attest_irreducible, std::string label,
                                 std::string group) {
  CurveStatus st = CurveStatus::unknown;
  if (c.degree() == 1) st = CurveStatus::verified;
  else if (c.degree() == 2) st = is_irreducible_conic(c) ? CurveStatus::verified : CurveStatus::unknown;
  else if (attest_irreducible) st = CurveStatus::attested;
  std::vector<std::size_t> mults;
  for (const auto& p : points_) mults.push_back(mult_at(c, p));
  if (label.empty()) label = "C" + std::to_string(curves_.size() + 1);
  curves_.push_back({c, st, std::move(label), std::move(group), std::move(mults)});
  return curves_.back();
}

const AuxCurve& AuxCurveSet::add_line(std::size_t i, std::size_t j, std::string group) {
  if (i >= points_.size() || j >= points_.size()) throw ParseError("aux line index out of range");
  return add(line_through(points_[i], points_[j]), false,
             "L" + std::to_string(i) + "," + std::to_string(j), std::move(group));
}

const AuxCurve& AuxCurveSet::add_conic(const std::vector<std::size_t>& idx, std::string group) {
  if (idx.size() != 5) throw ParseError("aux conic needs five point indices");
  std::vector<ProjPoint> five;
  std::string label = "Q";
  for (auto i : idx) {
    if (i >= points_.size()) throw ParseError("aux conic index out of range");
    five.push_back(points_[i]);
    label += (label.size() > 1 ? "," : "") + std::to_string(i);
  }
  return add(conic_through(five), false, label, std::move(group));
}

bool AuxCurveSet::contains(const PlaneCurve& c) const {
  return std::any_of(curves_.begin(), curves_.end(), [&](const AuxCurve& a) { return a.curve == c; });
}

AuxCurveSet auto_aux(const std::vector<ProjPoint>& points, std::size_t cap, bool with_conics) {
  IncidenceProfile prof = incidence_profile(points, std::max(points.size(), kDefaultPointCap));
  struct Cand {
    int excess;
    PlaneCurve curve;
  };
  std::vector<Cand> cands;
  std::map<PlaneCurve, int> lines;
  for (const auto& [ij, l] : prof.pairwise_lines) {
    if (lines.count(l)) continue;
    int k = 0;
    for (const auto& p : points) k += l.contains(p);
    lines[l] = k;
    cands.push_back({k - 2, l});
  }
  const std::size_t n = points.size();
  std::map<PlaneCurve, int> conics;
  std::vector<std::size_t> idx(5);
  if (with_conics && n >= 5) {
    for (idx[0] = 0; idx[0] < n; ++idx[0])
      for (idx[1] = idx[0] + 1; idx[1] < n; ++idx[1])
        for (idx[2] = idx[1] + 1; idx[2] < n; ++idx[2])
          for (idx[3] = idx[2] + 1; idx[3] < n; ++idx[3])
            for (idx[4] = idx[3] + 1; idx[4] < n; ++idx[4]) {
              bool general = true;
              for (int a = 0; a < 5 && general; ++a)
                for (int b = a + 1; b < 5 && general; ++b)
                  for (int c = b + 1; c < 5 && general; ++c)
                    if (collinear(points[idx[a]], points[idx[b]], points[idx[c]])) general = false;
              if (!general) continue;
              std::vector<ProjPoint> five;
              for (auto i : idx) five.push_back(points[i]);
              PlaneCurve c = conic_through(five);
              if (conics.count(c)) continue;
              int k = 0;
              for (const auto& p : points) k += c.contains(p);
              conics[c] = k;
              cands.push_back({k - 5, c});
            }
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    bool ra = a.excess > 0, rb = b.excess > 0;
    if (ra != rb) return ra;
    if (a.excess != b.excess) return a.excess > b.excess;
    return a.curve.degree() < b.curve.degree();
  });
  AuxCurveSet aux(points);
  if (n == 1 && cap > 0) {
    ProjPoint other = points[0] == ProjPoint(1, 0, 0) ? ProjPoint(0, 1, 0) : ProjPoint(1, 0, 0);
    aux.add(line_through(points[0], other));
  }
  for (const auto& c : cands) {
    if (aux.size() >= cap) break;
    aux.add(c.curve);
  }
  return aux;
}

std::size_t BezoutSystem::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return i;
  throw ParseError("unknown variable '" + name + "'");
}

BezoutSystem build_system(const AuxCurveSet& aux, BuildOptions opts) {
  const auto& curves = aux.curves();
  for (const auto& c : curves)
    if (c.status == CurveStatus::unknown)
      throw UnverifiedCurveError("aux curve " + c.label + " has unknown irreducibility");
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j)
      if (curves[i].curve == curves[j].curve)
        throw ProportionalCurvesError("aux curves " + curves[i].label + " and " + curves[j].label +
                                      " are proportional");
  // Variable index for each curve.
  BezoutSystem sys;
  sys.variables.push_back("t");
  std::vector<std::size_t> var_of(curves.size());
  std::map<std::string, std::size_t> group_var;
  for (std::size_t j = 0; j < curves.size(); ++j) {
    const std::string& g = curves[j].group;
    if (opts.grouped && !g.empty()) {
      auto it = group_var.find(g);
      if (it == group_var.end()) {
        it = group_var.emplace(g, sys.variables.size()).first;
        sys.variables.push_back(g);
      }
      var_of[j] = it->second;
    } else {
      var_of[j] = sys.variables.size();
      sys.variables.push_back("a:" + curves[j].label);
    }
  }
  const std::size_t nv = sys.variables.size();
  const std::size_t np = aux.points().size();
  // Aggregated degree and multiplicities per variable.
  std::vector<Rational> vdeg(nv);
  std::vector<std::vector<Rational>> vmult(nv, std::vector<Rational>(np));
  for (std::size_t j = 0; j < curves.size(); ++j) {
    vdeg[var_of[j]] += curves[j].curve.degree();
    for (std::size_t i = 0; i < np; ++i) vmult[var_of[j]][i] += static_cast<long>(curves[j].mults[i]);
  }
  Constraint deg{"degree", RatVector(nv), Rational()};
  deg.coeffs[0] = 1;
  for (std::size_t v = 1; v < nv; ++v) deg.coeffs[v] = -vdeg[v];
  sys.constraints.push_back(deg);
  for (std::size_t j = 0; j < curves.size(); ++j) {
    const Rational dj = curves[j].curve.degree();
    Constraint c{"curve " + curves[j].label, RatVector(nv), Rational()};
    c.coeffs[0] = dj;
    for (std::size_t i = 0; i < np; ++i) c.rhs += static_cast<long>(curves[j].mults[i]);
    for (std::size_t v = 1; v < nv; ++v) {
      Rational s = -dj * vdeg[v];
      for (std::size_t i = 0; i < np; ++i)
        if (curves[j].mults[i]) s += Rational(static_cast<long>(curves[j].mults[i])) * vmult[v][i];
      c.coeffs[v] = s;
    }
    sys.constraints.push_back(c);
  }
  return sys;
}

namespace {

void check_shape(const BezoutSystem& sys) {
  if (sys.variables.empty()) throw std::invalid_argument("system without variables");
  for (const auto& c : sys.constraints)
    if (c.coeffs.size() != sys.variables.size())
      throw std::invalid_argument("constraint " + c.label + " has the wrong width");
}

}  // namespace

LowerBoundCertificate solve_min_ratio(const BezoutSystem& sys) {
  check_shape(sys);
  const std::size_t nc = sys.constraints.size();
  const std::size_t nv = sys.variables.size();
  // Dual program: maximize h.y subject to G_t^T y = 1, G_a^T y + s = 0, y, s >= 0.
  RatMatrix a(nv, nc + (nv - 1));
  RatVector b(nv), c(nc + (nv - 1));
  b[0] = 1;
  for (std::size_t i = 0; i < nc; ++i) {
    c[i] = sys.constraints[i].rhs;
    for (std::size_t v = 0; v < nv; ++v) a(v, i) = sys.constraints[i].coeffs[v];
  }
  for (std::size_t v = 1; v < nv; ++v) a(v, nc + v - 1) = 1;
  LpResult lp = maximize(a, b, c);
  if (lp.status != LpStatus::optimal) throw InternalError("Bezout system has no finite minimum");
  LowerBoundCertificate cert;
  cert.system = sys;
  cert.bound = lp.value;
  cert.duals.assign(lp.x.begin(), lp.x.begin() + static_cast<std::ptrdiff_t>(nc));
  cert.primal = lp.duals;
  if (cert.primal[0] != cert.bound) throw InternalError("primal and dual optima differ");
  if (!complementary_slackness(sys, cert.duals, cert.primal))
    throw InternalError("complementary slackness fails at the optimum");
  return cert;
}

bool complementary_slackness(const BezoutSystem& sys, const RatVector& duals, const RatVector& primal) {
  const std::size_t nv = sys.variables.size();
  for (std::size_t v = 1; v < nv; ++v)
    if (primal[v].sign() < 0) return false;
  RatVector comb(nv);
  for (std::size_t i = 0; i < sys.constraints.size(); ++i) {
    const auto& c = sys.constraints[i];
    Rational lhs;
    for (std::size_t v = 0; v < nv; ++v) lhs += c.coeffs[v] * primal[v];
    if (lhs < c.rhs) return false;
    if (duals[i].sign() > 0 && lhs != c.rhs) return false;
    for (std::size_t v = 0; v < nv; ++v) comb[v] += duals[i] * c.coeffs[v];
  }
  for (std::size_t v = 1; v < nv; ++v)
    if (primal[v].sign() > 0 && !comb[v].is_zero()) return false;
  return true;
}

CertificateCheck verify_certificate(const LowerBoundCertificate& cert) {
  const auto& sys = cert.system;
  const std::size_t nv = sys.variables.size();
  if (nv == 0) return {false, "system has no variables"};
  if (cert.duals.size() != sys.constraints.size())
    return {false, "expected " + std::to_string(sys.constraints.size()) + " multipliers, got " +
                       std::to_string(cert.duals.size())};
  RatVector comb(nv);
  Rational rhs;
  for (std::size_t i = 0; i < sys.constraints.size(); ++i) {
    const auto& c = sys.constraints[i];
    if (c.coeffs.size() != nv) return {false, "constraint " + c.label + " has the wrong width"};
    if (cert.duals[i].sign() < 0) return {false, "negative multiplier on " + c.label};
    for (std::size_t v = 0; v < nv; ++v) comb[v] += cert.duals[i] * c.coeffs[v];
    rhs += cert.duals[i] * c.rhs;
  }
  if (comb[0] != 1) return {false, "combined t coefficient is " + comb[0].str() + ", not 1"};
  for (std::size_t v = 1; v < nv; ++v)
    if (comb[v].sign() > 0)
      return {false, "combined coefficient of " + sys.variables[v] + " is positive (" + comb[v].str() + ")"};
  if (rhs != cert.bound) return {false, "combined constant " + rhs.str() + " differs from bound " + cert.bound.str()};
  return {true, "ok"};
}

LowerBoundCertificate certificate_from_multipliers(const BezoutSystem& sys, const RatVector& mult) {
  check_shape(sys);
  if (mult.size() != sys.constraints.size()) throw std::invalid_argument("multiplier count mismatch");
  Rational tcoef, rhs;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    tcoef += mult[i] * sys.constraints[i].coeffs[0];
    rhs += mult[i] * sys.constraints[i].rhs;
  }
  LowerBoundCertificate cert;
  cert.system = sys;
  if (tcoef.sign() <= 0) {
    cert.duals = mult;
    cert.bound = rhs;
    return cert;
  }
  for (const auto& w : mult) cert.duals.push_back(w / tcoef);
  cert.bound = rhs / tcoef;
  return cert;
}

BezoutSystem system_from_inequalities(const std::vector<std::string>& vars,
                                      const std::vector<HandInequality>& ineqs) {
  BezoutSystem sys;
  sys.variables.push_back("t");
  for (const auto& v : vars) sys.variables.push_back(v);
  for (std::size_t k = 0; k < ineqs.size(); ++k) {
    Constraint c{std::to_string(k + 1), RatVector(sys.variables.size()), ineqs[k].cm};
    c.coeffs[0] = ineqs[k].cd;
    for (const auto& [name, coef] : ineqs[k].terms) c.coeffs[sys.variable_index(name)] -= coef;
    sys.constraints.push_back(c);
  }
  return sys;
}

}  // namespace wald
