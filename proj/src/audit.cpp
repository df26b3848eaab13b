#include "wald/audit.hpp"

#include "wald/errors.hpp"
#include "wald/fat_points.hpp"

namespace wald {

void AuditReport::record(bool cond, const std::string& what) {
  (cond ? passed : failed).push_back(what);
  ok = ok && cond;
}

Mat3 random_unimodular(std::mt19937_64& rng, int steps) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i) t[i][i] = Rational(1);
  std::uniform_int_distribution<int> pick(0, 2), coef(-2, 2), sign(0, 1);
  for (int s = 0; s < steps; ++s) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Rational c(coef(rng));
    for (int k = 0; k < 3; ++k) t[i][k] += c * t[j][k];
  }
  std::array<int, 3> perm = {0, 1, 2};
  std::shuffle(perm.begin(), perm.end(), rng);
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    out[i] = t[perm[i]];
    if (sign(rng))
      for (auto& x : out[i]) x = -x;
  }
  return out;
}

std::vector<ProjPoint> transform_all(const Mat3& t, const std::vector<ProjPoint>& pts) {
  std::vector<ProjPoint> out;
  for (const auto& p : pts) out.push_back(transform(t, p));
  return out;
}

AuditReport audit(const std::vector<ProjPoint>& pts, const ClassificationResult& r, const AuditConfig& cfg) {
  AuditReport rep;
  rep.record(r.lower <= r.upper, "lower " + r.lower.str() + " <= upper " + r.upper.str());
  if (r.lower_cert) {
    auto chk = verify_certificate(*r.lower_cert);
    rep.record(chk.ok && r.lower_cert->bound == r.lower, "attached lower certificate verifies" +
                                                             (chk.ok ? std::string() : ": " + chk.reason));
  }
  if (r.upper_evidence && r.upper_evidence->divisor) {
    try {
      Rational u = verify_upper(*r.upper_evidence->divisor, pts);
      rep.record(u == r.upper_evidence->bound, "attached construction verifies with ratio " + u.str());
    } catch (const InsufficientMultiplicityError& e) {
      rep.record(false, std::string("attached construction rejected: ") + e.what());
    }
  }

  int m_attain = 0;
  if (r.exact) {
    m_attain = static_cast<int>(r.exact->denominator().get_si());
    if (r.upper_evidence && r.upper_evidence->divisor) m_attain = r.upper_evidence->divisor->m;
    if (r.upper_evidence && r.upper_evidence->entry) m_attain = r.upper_evidence->entry->m;
  }
  Engine fresh(EngineConfig{cfg.m_max, 1});
  auto trace = fresh.sweep(pts, std::max(cfg.m_max, m_attain));
  for (const auto& e : trace)
    rep.record(e.ratio >= r.lower, "sweep m=" + std::to_string(e.m) + " ratio " + e.ratio.str() + " >= lower");
  if (r.exact) {
    Rational at = trace[m_attain - 1].ratio;
    rep.record(at == *r.exact, "sweep at m=" + std::to_string(m_attain) + " attains " + r.exact->str() + " (got " +
                                   at.str() + ")");
  } else if (!r.sweep.empty()) {
    rep.record(trace.back().running_min >= r.upper,
               "sweep minimum " + trace.back().running_min.str() + " >= reported upper " + r.upper.str());
  }

  auto lp = auto_lower_bound(pts, {}, cfg.aux_cap);
  rep.record(verify_certificate(lp).ok, "fresh automatic LP certificate verifies");
  rep.record(lp.bound <= r.upper, "fresh automatic LP bound " + lp.bound.str() + " <= upper");

  for (const auto& e : trace) {
    if (e.m > cfg.modular_m_max) break;
    FatPointScheme s = FatPointScheme::uniform(pts, e.m);
    for (int d : {e.alpha - 1, e.alpha}) {
      if (d < 1) continue;
      RatMatrix mat = interpolation_matrix(s, d);
      std::size_t ex = rank_exact(mat);
      bool agree = true;
      for (auto p : cfg.primes) agree = agree && rank_modular(mat, p) == ex;
      rep.record(agree, "modular ranks agree at m=" + std::to_string(e.m) + " d=" + std::to_string(d));
    }
  }

  if (cfg.transform) {
    std::mt19937_64 rng(cfg.seed);
    Mat3 t = random_unimodular(rng);
    ClassifyConfig cc;
    cc.m_max = cfg.m_max;
    cc.aux_cap = cfg.aux_cap;
    ClassificationResult moved = classify(transform_all(t, pts), cc);
    rep.record(moved.family == r.family, "family stable under a change of coordinates");
    bool same = moved.exact == r.exact && (r.exact || (moved.lower == r.lower && moved.upper == r.upper));
    rep.record(same, "value stable under a change of coordinates");
  }
  return rep;
}

}  // namespace wald
