#include "wald/classifier.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "wald/errors.hpp"

namespace wald {

namespace {

std::vector<ProjPoint> subset(const std::vector<ProjPoint>& pts, const std::vector<std::size_t>& idx) {
  std::vector<ProjPoint> out;
  for (auto i : idx) out.push_back(pts[i]);
  return out;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) out.push_back(i);
  return out;
}

struct Chord {
  PlaneCurve line;
  std::vector<std::size_t> ends;
};

// Lines through q meeting at least two of the listed points.
std::vector<Chord> chords_through(const ProjPoint& q, const std::vector<ProjPoint>& pts,
                                  const std::vector<std::size_t>& idx) {
  std::map<PlaneCurve, std::vector<std::size_t>> by_line;
  for (auto i : idx) by_line[line_through(q, pts[i])].push_back(i);
  std::vector<Chord> out;
  for (auto& [l, v] : by_line)
    if (v.size() >= 2) out.push_back({l, v});
  std::sort(out.begin(), out.end(), [](const Chord& a, const Chord& b) { return a.ends < b.ends; });
  return out;
}

class Classifier {
 public:
  Classifier(const std::vector<ProjPoint>& pts, const ClassifyConfig& cfg, Engine& eng)
      : pts_(pts), cfg_(cfg), eng_(eng), n_(pts.size()) {
    prof_ = incidence_profile(pts_, cfg_.point_cap);
  }

  ClassificationResult run() {
    if (auto r = line_families()) return *r;
    if (auto r = conic_families()) return *r;
    if (n_ == 9) {
      if (auto r = nine_families()) return *r;
    }
    return fallback();
  }

 private:
  const std::vector<ProjPoint>& pts_;
  const ClassifyConfig& cfg_;
  Engine& eng_;
  std::size_t n_;
  IncidenceProfile prof_;
  std::vector<std::string> pending_notes_;

  static constexpr std::size_t kUncapped = 100000;

  LowerBoundCertificate lp(const std::vector<std::size_t>& support = {}, bool lines_only = false) const {
    return auto_lower_bound(pts_, support, kUncapped, lines_only);
  }

  DivisorTerm term(const PlaneCurve& c, long k, std::string label) const { return {c, k, std::move(label)}; }

  PlaneCurve line(std::size_t i, std::size_t j) const { return line_through(pts_[i], pts_[j]); }

  PlaneCurve conic(const std::vector<std::size_t>& idx) const { return conic_through(subset(pts_, idx)); }

  ClassificationResult base(std::string family, Citation cite) {
    ClassificationResult r;
    r.family = std::move(family);
    r.citations.push_back(std::move(cite));
    r.notes = pending_notes_;
    return r;
  }

  ClassificationResult exact(std::string family, Citation cite, const Rational& v,
                             const LowerBoundCertificate& cert, const FormalDivisor& dv) {
    ClassificationResult r = base(std::move(family), std::move(cite));
    Rational ratio = verify_upper(dv, pts_);
    UpperEvidence up{UpperEvidence::Kind::construction, ratio, dv, std::nullopt};
    WaldschmidtResult w = conclude({cert}, {up}, {});
    r.lower = w.lower;
    r.upper = w.upper;
    r.lower_cert = w.lower_cert;
    r.upper_evidence = w.upper_evidence;
    if (w.exact && *w.exact == v) {
      r.exact = v;
    } else {
      r.notes.push_back("certificates do not close at the family value " + v.str() + "; reporting the certified interval");
      if (w.exact) r.exact = w.exact;
    }
    return r;
  }

  ClassificationResult interval(std::string family, Citation cite, const std::vector<LowerBoundCertificate>& lowers,
                                const std::vector<FormalDivisor>& constructions, const Rational& family_lower) {
    ClassificationResult r = base(std::move(family), std::move(cite));
    std::vector<UpperEvidence> ups;
    for (const auto& dv : constructions)
      ups.push_back({UpperEvidence::Kind::construction, verify_upper(dv, pts_), dv, std::nullopt});
    Rational hint;
    for (const auto& c : lowers) hint = max(hint, c.bound);
    std::vector<SweepEntry> trace;
    if (cfg_.sweep_intervals) trace = eng_.sweep(pts_, cfg_.m_max, hint);
    WaldschmidtResult w = conclude(lowers, ups, trace);
    r.lower = w.lower;
    r.upper = w.upper;
    r.lower_cert = w.lower_cert;
    r.upper_evidence = w.upper_evidence;
    r.sweep = trace;
    if (w.exact) {
      r.exact = w.exact;
      r.notes.push_back("lower certificate meets a verified upper bound; value is exact");
    } else {
      r.notes.push_back("bounds only");
    }
    if (r.lower < family_lower)
      r.notes.push_back("certified lower bound " + r.lower.str() + " is below the family bound " + family_lower.str());
    return r;
  }

  // Table T1: at least n-3 points on a line.
  std::optional<ClassificationResult> line_families() {
    if (n_ < 7 || !prof_.max_line) return std::nullopt;
    const std::size_t k = prof_.max_collinear;
    if (k + 3 < n_) return std::nullopt;
    const PlaneCurve L = *prof_.max_line;
    std::vector<std::size_t> on, off;
    for (std::size_t i = 0; i < n_; ++i) (L.contains(pts_[i]) ? on : off).push_back(i);
    const long nn = static_cast<long>(n_);
    if (k == n_) {
      FormalDivisor dv{{term(L, 1, "L")}, 1};
      return exact("line.all", {"T1/all", "every point lies on one line"}, Rational(1), lp({}, true), dv);
    }
    if (k + 1 == n_) {
      FormalDivisor dv{{term(L, nn - 2, "L")}, static_cast<int>(nn - 1)};
      for (auto i : on) dv.terms.push_back(term(line(off[0], i), 1, "QP" + std::to_string(i)));
      return exact("line.n-1", {"T1/n-1", "all but one point lie on a line"},
                   Rational(Integer(2 * nn - 3), Integer(nn - 1)), lp({}, true), dv);
    }
    if (k + 2 == n_) {
      FormalDivisor dv{{term(L, 1, "L"), term(line(off[0], off[1]), 1, "Q1Q2")}, 1};
      return exact("line.n-2", {"T1/n-2", "all but two points lie on a line"}, Rational(2), lp({}, true), dv);
    }
    const auto& q = off;
    if (collinear(pts_[q[0]], pts_[q[1]], pts_[q[2]])) {
      FormalDivisor dv{{term(L, 1, "L"), term(line(q[0], q[1]), 1, "Q1Q2Q3")}, 1};
      return exact("line.n-3.collinear-residual", {"T1/n-3/collinear", "the three residual points are collinear"},
                   Rational(2), lp({}, true), dv);
    }
    std::vector<ProjPoint> ps = subset(pts_, on), qs = subset(pts_, q);
    std::vector<std::size_t> qc_local = q_collinear_set(ps, qs);
    std::vector<std::size_t> qcol, fr;
    for (std::size_t a = 0; a < on.size(); ++a)
      (std::find(qc_local.begin(), qc_local.end(), a) != qc_local.end() ? qcol : fr).push_back(on[a]);
    const std::size_t qn = qcol.size();
    PlaneCurve s1 = line(q[1], q[2]), s2 = line(q[0], q[2]), s3 = line(q[0], q[1]);
    auto sides = [&](long c) {
      return std::vector<DivisorTerm>{term(s1, c, "L1"), term(s2, c, "L2"), term(s3, c, "L3")};
    };
    const std::string tag = "q" + std::to_string(qn) + "k" + std::to_string(k);
    if (k - qn >= 4) {
      FormalDivisor dv{sides(1), 2};
      dv.terms.push_back(term(L, 2, "L"));
      std::vector<std::size_t> sup = q;
      sup.insert(sup.end(), fr.begin(), fr.begin() + 4);
      std::sort(sup.begin(), sup.end());
      return exact("line.n-3.free4", {"T1/n-3/" + tag, "at least four line points avoid the triangle sides"},
                   Rational(5, 2), lp(sup, true), dv);
    }
    if (qn == 3 && k == 4) {
      FormalDivisor dv{sides(3), 7};
      for (int j = 0; j < 3; ++j) dv.terms.push_back(term(line(fr[0], q[j]), 1, "H" + std::to_string(j + 1)));
      dv.terms.push_back(term(L, 4, "L"));
      return exact("line.n-3.q3k4", {"T1/n-3/q3k4", "three of four line points sit on the triangle sides"},
                   Rational(16, 7), lp(), dv);
    }
    if ((qn == 3 && k == 5) || (qn == 2 && k == 4)) {
      FormalDivisor dv{sides(1), 3};
      dv.terms.push_back(term(conic({q[0], q[1], q[2], fr[0], fr[1]}), 1, "C"));
      dv.terms.push_back(term(L, 2, "L"));
      return exact("line.n-3." + tag, {"T1/n-3/" + tag, "two line points avoid the triangle sides"},
                   Rational(7, 3), lp(), dv);
    }
    FormalDivisor dv{sides(2), 7};
    dv.terms.push_back(term(conic({q[0], q[1], q[2], fr[1], fr[2]}), 1, "C1"));
    dv.terms.push_back(term(conic({q[0], q[1], q[2], fr[0], fr[2]}), 1, "C2"));
    dv.terms.push_back(term(conic({q[0], q[1], q[2], fr[0], fr[1]}), 1, "C3"));
    dv.terms.push_back(term(L, 5, "L"));
    return exact("line.n-3." + tag, {"T1/n-3/" + tag, "three line points avoid the triangle sides"},
                 Rational(17, 7), lp(), dv);
  }

  const PointGroup* conic_group_of_size(std::size_t size) const {
    for (const auto& g : prof_.conic_subsets)
      if (g.members.size() == size) return &g;
    return nullptr;
  }

  FormalDivisor conic_plus_line(const PlaneCurve& c, std::size_t i, std::size_t j) const {
    return FormalDivisor{{term(c, 1, "C"), term(line(i, j), 1, "L")}, 1};
  }

  // Seven conic points plus the external point with at most two chords
  // through it.
  std::vector<std::size_t> reduced_support(std::size_t qi, std::vector<std::size_t> cp) const {
    while (cp.size() > 7) {
      auto ch = chords_through(pts_[qi], pts_, cp);
      std::size_t drop = ch.size() > 2 ? ch.front().ends.front() : cp.back();
      cp.erase(std::find(cp.begin(), cp.end(), drop));
    }
    cp.push_back(qi);
    std::sort(cp.begin(), cp.end());
    return cp;
  }

  // Table T2: all but one point on an irreducible conic.
  std::optional<ClassificationResult> conic_families() {
    if (n_ < 7 || !prof_.conics_enumerated) return std::nullopt;
    const PointGroup* g = conic_group_of_size(n_ - 1);
    if (!g) return std::nullopt;
    const PlaneCurve& C = g->witness;
    const std::vector<std::size_t>& cp = g->members;
    const std::size_t qi = complement(n_, cp).front();
    auto ch = chords_through(pts_[qi], pts_, cp);
    const std::size_t c = ch.size();
    const std::string cs = "c" + std::to_string(c);
    auto chord_terms = [&](std::size_t count) {
      std::vector<DivisorTerm> t;
      for (std::size_t i = 0; i < count; ++i) t.push_back(term(ch[i].line, 1, "L" + std::to_string(i + 1)));
      return t;
    };
    if (n_ == 7) {
      if (c >= 3) {
        FormalDivisor dv{chord_terms(3), 3};
        dv.terms.push_back(term(C, 2, "C"));
        return exact("conic.n7.concurrent", {"T2/n7/" + cs, "the external point lies on three chords"},
                     Rational(7, 3), lp(), dv);
      }
      std::vector<ProjPoint> six = subset(pts_, cp);
      FormalDivisor dv{{term(cubic_with_double_point(six, pts_[qi]), 1, "cubic"), term(C, 1, "C")}, 2};
      return exact("conic.n7.general", {"T2/n7/" + cs, "the external point lies on at most two chords"},
                   Rational(5, 2), lp(), dv);
    }
    if (n_ == 8) {
      if (c >= 3) {
        FormalDivisor dv{chord_terms(3), 4};
        std::set<std::size_t> used;
        for (std::size_t i = 0; i < 3; ++i) used.insert(ch[i].ends.begin(), ch[i].ends.end());
        std::size_t rest = *std::find_if(cp.begin(), cp.end(), [&](std::size_t i) { return !used.count(i); });
        dv.terms.push_back(term(line(qi, rest), 1, "L4"));
        dv.terms.push_back(term(C, 3, "C"));
        return exact("conic.n8.concurrent", {"T2/n8/" + cs, "the external point lies on three chords"},
                     Rational(5, 2), lp(), dv);
      }
      if (c == 2) {
        std::size_t p1 = ch[0].ends[0], p2 = ch[0].ends[1];
        std::vector<std::size_t> rest;
        for (auto i : cp)
          if (i != p1 && i != p2 && i != ch[1].ends[0] && i != ch[1].ends[1]) rest.push_back(i);
        FormalDivisor dv{{term(conic({p1, rest[0], rest[1], rest[2], qi}), 1, "C1"),
                          term(conic({p2, rest[0], rest[1], rest[2], qi}), 1, "C2"),
                          term(ch[0].line, 1, "L1"), term(ch[1].line, 2, "L2"), term(C, 3, "C")},
                         5};
        pending_notes_.push_back("upper construction uses conics through one endpoint of the first chord, "
                                 "the three free conic points and the external point");
        return exact("conic.n8.c2", {"T2/n8/" + cs, "the external point lies on exactly two chords"},
                     Rational(13, 5), lp(), dv);
      }
      if (c == 1) {
        std::size_t p6 = ch[0].ends[0], p7 = ch[0].ends[1];
        std::vector<std::size_t> five;
        for (auto i : cp)
          if (i != p6 && i != p7) five.push_back(i);
        auto six_with = [&](std::size_t extra) {
          std::vector<std::size_t> s = five;
          s.push_back(extra);
          return subset(pts_, s);
        };
        FormalDivisor dv{{term(cubic_with_double_point(six_with(p6), pts_[qi]), 1, "cubic1"),
                          term(cubic_with_double_point(six_with(p7), pts_[qi]), 1, "cubic2"),
                          term(ch[0].line, 1, "L"), term(C, 3, "C")},
                         5};
        return exact("conic.n8.c1", {"T2/n8/" + cs, "the external point lies on exactly one chord"},
                     Rational(13, 5), lp(), dv);
      }
      return interval("conic.n8.c0", {"T2/n8/" + cs, "the external point lies on no chord"}, {lp()},
                      {conic_plus_line(C, qi, cp.front())}, Rational(13, 5));
    }
    if (n_ == 9 && c >= 4) {
      FormalDivisor dv{chord_terms(4), 4};
      dv.terms.push_back(term(C, 3, "C"));
      return exact("conic.n9.concurrent4", {"T2/n9/" + cs, "the external point lies on four chords"},
                   Rational(5, 2), lp(), dv);
    }
    std::vector<LowerBoundCertificate> lowers{lp(reduced_support(qi, cp))};
    if (n_ <= 9) lowers.push_back(lp());
    std::string fam = n_ == 9 ? "conic.n9.other" : "conic.n10plus";
    return interval(fam, {n_ == 9 ? "T2/n9/" + cs : "T2/n10+", "all but one point on a conic"}, lowers,
                    {conic_plus_line(C, qi, cp.front())}, Rational(13, 5));
  }

  // Table T3 for nine points.
  std::optional<ClassificationResult> nine_families() {
    auto cubics = curves_through(3, pts_, std::vector<int>(n_, 1));
    if (cubics.size() == 1) {
      const PlaneCurve& cub = cubics.front();
      if (is_smooth_cubic(cub)) {
        AuxCurveSet aux(pts_);
        aux.add(cub, true, "cubic");
        FormalDivisor dv{{term(cub, 1, "cubic")}, 1};
        return exact("nine.smooth-cubic", {"T3/cubic", "the nine points lie on a smooth cubic"}, Rational(3),
                     solve_min_ratio(build_system(aux)), dv);
      }
      pending_notes_.push_back("the unique cubic through the points is not certified smooth");
    }
    if (!prof_.conics_enumerated) return std::nullopt;
    if (const PointGroup* g = conic_group_of_size(7)) return seven_two(*g);
    for (const auto& g : prof_.conic_subsets) {
      if (g.members.size() != 6) continue;
      auto ext = complement(n_, g.members);
      if (collinear(pts_[ext[0]], pts_[ext[1]], pts_[ext[2]])) return six_three(g, ext);
    }
    for (const auto& grp : prof_.collinear_groups) {
      if (grp.members.size() != 4) continue;
      auto rest = complement(n_, grp.members);
      bool general = true;
      for (std::size_t a = 0; a < 5 && general; ++a)
        for (std::size_t b = a + 1; b < 5 && general; ++b)
          for (std::size_t c = b + 1; c < 5 && general; ++c)
            if (collinear(pts_[rest[a]], pts_[rest[b]], pts_[rest[c]])) general = false;
      if (!general) continue;
      PlaneCurve C = conic(rest);
      FormalDivisor dv{{term(C, 1, "C"), term(grp.witness, 1, "L")}, 1};
      return interval("nine.conic5-line4", {"T3/5+4", "five points on a conic and four on a line"}, {lp()}, {dv},
                      Rational(14, 5));
    }
    return std::nullopt;
  }

  ClassificationResult seven_two(const PointGroup& g) {
    auto ext = complement(n_, g.members);
    const std::size_t e1 = ext[0], e2 = ext[1];
    std::size_t c1 = chords_through(pts_[e1], pts_, g.members).size();
    std::size_t c2 = chords_through(pts_[e2], pts_, g.members).size();
    PlaneCurve join = line(e1, e2);
    std::size_t on_join = 0;
    for (auto i : g.members) on_join += join.contains(pts_[i]);
    std::string sub;
    Rational fam(18, 7);
    if (c1 < 3 || c2 < 3) {
      sub = "one external point on fewer than three chords";
      fam = Rational(13, 5);
    } else if (on_join == 2) {
      sub = "both external points on three chords sharing a chord";
    } else {
      sub = "both external points on three chords, no shared chord";
      fam = Rational(122, 43);
    }
    pending_notes_.push_back("subcase: " + sub);
    std::vector<LowerBoundCertificate> lowers{lp(), lp(complement(n_, {e2})), lp(complement(n_, {e1}))};
    FormalDivisor dv{{term(g.witness, 1, "C"), term(join, 1, "L")}, 1};
    return interval("nine.conic7", {"T3/7+2", "seven points on a conic and two off it"}, lowers, {dv}, fam);
  }

  ClassificationResult six_three(const PointGroup& g, const std::vector<std::size_t>& ext) {
    const PlaneCurve& C = g.witness;
    PlaneCurve L = line(ext[0], ext[1]);
    std::vector<std::size_t> on_l, off_l;
    for (auto i : g.members) (L.contains(pts_[i]) ? on_l : off_l).push_back(i);
    FormalDivisor cl{{term(C, 1, "C"), term(L, 1, "L")}, 1};
    if (on_l.empty())
      return exact("nine.conic6-line3.free", {"T3/6+3/0", "no conic point on the line"}, Rational(3), lp(), cl);
    if (on_l.size() == 1)
      return interval("nine.conic6-line3.one", {"T3/6+3/1", "one conic point on the line"}, {lp()}, {cl},
                      Rational(58, 23));
    // Two conic points on L; quadrangle on the remaining four.
    const auto& q = off_l;
    const std::array<std::array<std::array<std::size_t, 2>, 2>, 3> pairings = {{
        {{{q[0], q[1]}, {q[2], q[3]}}},
        {{{q[0], q[2]}, {q[1], q[3]}}},
        {{{q[0], q[3]}, {q[1], q[2]}}},
    }};
    std::array<ProjPoint, 3> diag = {
        meet(line(q[0], q[1]), line(q[2], q[3])),
        meet(line(q[0], q[2]), line(q[1], q[3])),
        meet(line(q[0], q[3]), line(q[1], q[2])),
    };
    // For each external point: the pairing index of its diagonal point, or
    // the (pairing, side) of the single quadrangle line through it.
    struct Where {
      int diagonal = -1;
      int pairing = -1;
      int side = -1;
    };
    std::vector<Where> where(3);
    bool all_in = true;
    for (int e = 0; e < 3; ++e) {
      const ProjPoint& p = pts_[ext[e]];
      for (int a = 0; a < 3; ++a)
        if (diag[a] == p) where[e].diagonal = a;
      if (where[e].diagonal >= 0) continue;
      for (int a = 0; a < 3; ++a)
        for (int s = 0; s < 2; ++s)
          if (line(pairings[a][s][0], pairings[a][s][1]).contains(p)) {
            where[e].pairing = a;
            where[e].side = s;
          }
      if (where[e].pairing < 0) all_in = false;
    }
    int diagonals = 0;
    for (const auto& w : where) diagonals += w.diagonal >= 0;
    if (!all_in)
      return interval("nine.conic6-line3.two.sub1", {"T3/6+3/2/off", "an external point avoids the quadrangle lines"},
                      {lp()}, {cl}, Rational(53, 21));
    if (diagonals == 0)
      return interval("nine.conic6-line3.two.sub2",
                      {"T3/6+3/2/lines", "external points on quadrangle lines, none diagonal"}, {lp()}, {cl},
                      Rational(13, 5));
    if (diagonals >= 2)
      return interval("nine.conic6-line3.two.sub4", {"T3/6+3/2/two-diagonal", "two external points are diagonal points"},
                      {lp()}, {cl}, Rational(59, 23));
    int d = -1;
    std::vector<Where> others;
    for (const auto& w : where) (w.diagonal >= 0 ? d = w.diagonal : (others.push_back(w), 0));
    bool complementary = others[0].pairing == others[1].pairing && others[0].side != others[1].side;
    if (!complementary) {
      pending_notes_.push_back("six on a conic plus three on a line with one diagonal point, "
                               "but no listed arrangement matches; generic bound applies");
      return interval("fallback", {"T3/6+3/2", "two conic points on the line"}, {lp()}, {cl}, Rational(53, 21));
    }
    int b = others[0].pairing;
    pending_notes_.push_back("mirror configuration of the one-diagonal case is treated as exact");
    FormalDivisor dv{{term(line(pairings[d][0][0], pairings[d][0][1]), 1, "Ld1"),
                      term(line(pairings[d][1][0], pairings[d][1][1]), 1, "Ld2"),
                      term(line(pairings[b][0][0], pairings[b][0][1]), 2, "Lb1"),
                      term(line(pairings[b][1][0], pairings[b][1][1]), 2, "Lb2"), term(L, 3, "L"), term(C, 2, "C")},
                     5};
    return exact("nine.conic6-line3.two.sub3",
                 {"T3/6+3/2/one-diagonal", "one diagonal external point, others on the opposite pairing"},
                 Rational(13, 5), lp(), dv);
  }

  ClassificationResult fallback() {
    ClassificationResult r = base("fallback", {"fallback", "no table row applies"});
    std::vector<LowerBoundCertificate> lowers{auto_lower_bound(pts_, {}, cfg_.aux_cap)};
    std::vector<SweepEntry> trace = eng_.sweep(pts_, cfg_.m_max, lowers.front().bound);
    WaldschmidtResult w = conclude(lowers, {}, trace);
    r.lower = w.lower;
    r.upper = w.upper;
    r.lower_cert = w.lower_cert;
    r.upper_evidence = w.upper_evidence;
    r.sweep = trace;
    r.exact = w.exact;
    r.notes.push_back(w.exact ? "lower certificate meets a sweep ratio; value is exact" : "bounds only");
    return r;
  }
};

}  // namespace

LowerBoundCertificate auto_lower_bound(const std::vector<ProjPoint>& pts, const std::vector<std::size_t>& support,
                                       std::size_t cap, bool lines_only) {
  std::vector<ProjPoint> sub = support.empty() ? pts : subset(pts, support);
  AuxCurveSet aux = auto_aux(sub, cap, !lines_only);
  LowerBoundCertificate cert = solve_min_ratio(build_system(aux));
  if (!support.empty() && support.size() < pts.size()) cert.support = support;
  return cert;
}

ClassificationResult classify(const std::vector<ProjPoint>& pts, const ClassifyConfig& cfg, Engine* engine) {
  require_distinct(pts);
  if (pts.empty()) throw ParseError("no points given");
  Engine local(EngineConfig{cfg.m_max, 1});
  Classifier c(pts, cfg, engine ? *engine : local);
  return c.run();
}

}  // namespace wald
