#include "wald/engine.hpp"

#include <algorithm>

#include <future>

#include "wald/errors.hpp"

namespace wald {

int FormalDivisor::degree() const {
  long d = 0;
  for (const auto& t : terms) d += t.coeff * t.curve.degree();
  return static_cast<int>(d);
}

PlaneCurve FormalDivisor::expand() const {
  std::optional<PlaneCurve> prod;
  for (const auto& t : terms) {
    if (t.coeff <= 0) continue;
    PlaneCurve f = power(t.curve, static_cast<int>(t.coeff));
    prod = prod ? *prod * f : f;
  }
  if (!prod) throw std::invalid_argument("divisor without positive coefficients");
  return *prod;
}

Rational verify_upper(const FormalDivisor& dv, const std::vector<ProjPoint>& pts) {
  if (dv.m < 1) throw std::invalid_argument("divisor multiplicity must be positive");
  bool positive = false;
  for (const auto& t : dv.terms) {
    if (t.coeff < 0) throw std::invalid_argument("divisor coefficients must be nonnegative");
    positive |= t.coeff > 0;
  }
  if (!positive) throw std::invalid_argument("divisor without positive coefficients");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    long mult = 0;
    for (const auto& t : dv.terms)
      if (t.coeff > 0) mult += t.coeff * static_cast<long>(mult_at(t.curve, pts[i]));
    if (mult < dv.m)
      throw InsufficientMultiplicityError("divisor has multiplicity " + std::to_string(mult) + " < " +
                                              std::to_string(dv.m) + " at point " + std::to_string(i) +
                                              " " + pts[i].str(),
                                          i);
  }
  return Rational(Integer(dv.degree()), Integer(dv.m));
}

std::string scheme_key(const std::vector<ProjPoint>& pts) {
  std::vector<ProjPoint> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  std::string key;
  for (const auto& p : sorted) key += p.str();
  return key;
}

AlphaResult Engine::alpha(const std::vector<ProjPoint>& pts, int m, std::optional<Rational> lower_hint) {
  auto key = std::make_pair(scheme_key(pts), m);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  AlphaResult r = wald::alpha(FatPointScheme::uniform(pts, m), lower_hint);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.insert_or_assign(key, r);
  return r;
}

std::vector<SweepEntry> Engine::sweep(const std::vector<ProjPoint>& pts, int m_max,
                                      std::optional<Rational> lower_hint) {
  if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
  std::vector<int> alphas(static_cast<std::size_t>(m_max));
  if (cfg_.threads > 1) {
    std::vector<std::future<AlphaResult>> jobs;
    for (int m = 1; m <= m_max; ++m)
      jobs.push_back(std::async(std::launch::async, [this, &pts, m, lower_hint] {
        return alpha(pts, m, lower_hint);
      }));
    for (int m = 1; m <= m_max; ++m) alphas[m - 1] = jobs[m - 1].get().alpha;
  } else {
    for (int m = 1; m <= m_max; ++m) alphas[m - 1] = alpha(pts, m, lower_hint).alpha;
  }
  std::vector<SweepEntry> out;
  for (int m = 1; m <= m_max; ++m) {
    Rational ratio(Integer(alphas[m - 1]), Integer(m));
    Rational run = out.empty() ? ratio : min(out.back().running_min, ratio);
    out.push_back({m, alphas[m - 1], ratio, run});
  }
  return out;
}

std::size_t Engine::memo_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

WaldschmidtResult conclude(const std::vector<LowerBoundCertificate>& lowers,
                           const std::vector<UpperEvidence>& uppers,
                           const std::vector<SweepEntry>& trace) {
  WaldschmidtResult res;
  res.sweep = trace;
  for (const auto& c : lowers) {
    auto chk = verify_certificate(c);
    if (!chk) throw InternalError("lower certificate rejected: " + chk.reason);
    if (!res.lower_cert || c.bound > res.lower) {
      res.lower = c.bound;
      res.lower_cert = c;
    }
  }
  for (const auto& u : uppers) {
    if (!res.upper_evidence || u.bound < res.upper) {
      res.upper = u.bound;
      res.upper_evidence = u;
    }
  }
  for (const auto& e : trace) {
    if (!res.upper_evidence || e.ratio < res.upper) {
      res.upper = e.ratio;
      res.upper_evidence = UpperEvidence{UpperEvidence::Kind::sweep, e.ratio, std::nullopt, e};
    }
  }
  if (!res.upper_evidence) throw std::invalid_argument("no upper bound evidence");
  if (res.lower_cert && res.lower > res.upper)
    throw InconsistentBoundsError("lower bound " + res.lower.str() + " exceeds upper bound " + res.upper.str());
  if (res.lower_cert && res.lower == res.upper) res.exact = res.lower;
  return res;
}

}  // namespace wald
