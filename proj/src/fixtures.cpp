#include "wald/fixtures.hpp"

#include <functional>
#include <map>

#include "wald/errors.hpp"

namespace wald {

namespace {

using Pts = std::vector<ProjPoint>;

void require(bool ok, const std::string& name, const std::string& what) {
  if (!ok) throw InternalError("fixture " + name + " fails its predicate: " + what);
}

ProjPoint conic_pt(long p, long q = 1) { return ProjPoint(p * p, p * q, q * q); }
const ProjPoint kConicInf(1, 0, 0);
const PlaneCurve kConic(2, {Rational(0), Rational(0), Rational(1), Rational(-1), Rational(0), Rational(0)});

Pts conic_pts(const std::vector<long>& ts) {
  Pts out;
  for (long t : ts) out.push_back(conic_pt(t));
  return out;
}

Pts concat(Pts a, const Pts& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Line family: Q1, Q2, Q3 off the line x2 = 0.
const Pts kTriangle = {ProjPoint(0, 0, 1), ProjPoint(1, 0, 1), ProjPoint(0, 1, 1)};
const Pts kSidePts = {ProjPoint(1, -1, 0), ProjPoint(0, 1, 0), ProjPoint(1, 0, 0)};
const Pts kFreePts = {ProjPoint(1, 1, 0), ProjPoint(1, 2, 0), ProjPoint(2, 1, 0), ProjPoint(1, 3, 0),
                      ProjPoint(3, 1, 0), ProjPoint(1, -2, 0), ProjPoint(2, 3, 0)};

FixtureSpec line_fixture(const std::string& name, const std::vector<int>& sides, int free,
                         std::optional<ExpectedValue> ev, const std::string& ref) {
  Pts on;
  for (int s : sides) on.push_back(kSidePts[s]);
  for (int i = 0; i < free; ++i) on.push_back(kFreePts[i]);
  FixtureSpec f{name, concat(on, kTriangle), ev, ref, std::nullopt, {}};
  const std::size_t n = f.points.size();
  IncidenceProfile prof = incidence_profile(f.points);
  require(prof.max_collinear + 3 == n, name, "n-3 points on a line");
  require(!collinear(kTriangle[0], kTriangle[1], kTriangle[2]), name, "residual triangle");
  require(q_collinear_set(on, kTriangle).size() == sides.size(), name, "Q-collinear count");
  return f;
}

// All but one point on x0 x2 = x1^2; returns after checking the chord count
// through the external point.
FixtureSpec conic_fixture(const std::string& name, const Pts& on_conic, const ProjPoint& q, std::size_t chords,
                          std::optional<ExpectedValue> ev, const std::string& ref) {
  FixtureSpec f{name, concat(on_conic, {q}), ev, ref, kConic, {}};
  for (const auto& p : on_conic) require(kConic.contains(p), name, "point on the conic");
  require(!kConic.contains(q), name, "external point off the conic");
  require(concurrency_count_at(q, on_conic) == chords, name, "chord count through the external point");
  require(incidence_profile(f.points).max_collinear <= 2 + (chords > 0 ? 1 : 0), name, "no extra collinearity");
  return f;
}

std::size_t on_curve(const PlaneCurve& c, const Pts& pts) {
  std::size_t k = 0;
  for (const auto& p : pts) k += c.contains(p);
  return k;
}

// Nine points: six on the conic plus three on a line.
FixtureSpec six_three(const std::string& name, const Pts& pts, std::size_t conic_on_line,
                      std::optional<ExpectedValue> ev, const std::string& ref) {
  FixtureSpec f{name, pts, ev, ref, std::nullopt, {}};
  require(pts.size() == 9, name, "nine points");
  Pts ext;
  for (const auto& p : pts)
    if (!kConic.contains(p)) ext.push_back(p);
  require(ext.size() == 3, name, "six points on the conic");
  require(collinear(ext[0], ext[1], ext[2]), name, "external points collinear");
  PlaneCurve l = line_through(ext[0], ext[1]);
  require(on_curve(l, pts) == 3 + conic_on_line, name, "conic points on the line");
  require(incidence_profile(pts).conic_subsets.front().members.size() == 6, name, "no seven on a conic");
  return f;
}

// Nine points: seven on the conic, P8 and P9 off it.
FixtureSpec seven_two(const std::string& name, const Pts& on_conic, const ProjPoint& p8, const ProjPoint& p9,
                      std::size_t c8, std::size_t c9, bool shared, std::optional<ExpectedValue> ev,
                      const std::string& ref) {
  FixtureSpec f{name, concat(on_conic, {p8, p9}), ev, ref, std::nullopt, {}};
  for (const auto& p : on_conic) require(kConic.contains(p), name, "point on the conic");
  require(!kConic.contains(p8) && !kConic.contains(p9), name, "external points off the conic");
  require(concurrency_count_at(p8, on_conic) == c8, name, "chords through P8");
  require(concurrency_count_at(p9, on_conic) == c9, name, "chords through P9");
  require((on_curve(line_through(p8, p9), on_conic) == 2) == shared, name, "shared chord");
  return f;
}

// y^2 z = x^3 + b z^3 in affine coordinates.
struct AffinePt {
  Rational x, y;
};

AffinePt third_point(const AffinePt& p, const AffinePt& q) {
  Rational lambda = (p.x == q.x) ? Rational(3) * p.x * p.x / (Rational(2) * p.y) : (q.y - p.y) / (q.x - p.x);
  Rational x3 = lambda * lambda - p.x - q.x;
  Rational y3 = p.y + lambda * (x3 - p.x);
  return {x3, y3};
}

FixtureSpec cubic9() {
  const long b = 17;
  FixtureSpec f;
  f.name = "CUBIC9";
  f.figure_ref = "cubic/smooth";
  f.expected = ExpectedValue::exactly(Rational(3));
  // x1^2 x2 - x0^3 - b x2^3 in grlex order.
  RatVector coeffs(10);
  coeffs[monomial_index({3, 0, 0})] = Rational(-1);
  coeffs[monomial_index({0, 2, 1})] = Rational(1);
  coeffs[monomial_index({0, 0, 3})] = Rational(-b);
  f.curve = PlaneCurve(3, coeffs);
  f.trace.push_back("curve y^2 = x^3 + 17");
  AffinePt s1{Rational(-2), Rational(3)}, s2{Rational(-1), Rational(4)};
  f.trace.push_back("seeds (-2,3) (-1,4)");
  AffinePt chord = third_point(s1, s2);
  f.trace.push_back("chord (-2,3) (-1,4) meets (" + chord.x.str() + "," + chord.y.str() + ")");
  AffinePt tangent = third_point(s1, s1);
  f.trace.push_back("tangent at (-2,3) meets (" + tangent.x.str() + "," + tangent.y.str() + ")");
  AffinePt s1neg{s1.x, -s1.y};
  AffinePt extra = third_point(s1neg, chord);
  f.trace.push_back("chord (-2,-3) (" + chord.x.str() + "," + chord.y.str() + ") meets (" + extra.x.str() + "," +
                    extra.y.str() + ")");
  f.trace.push_back("reflections of the first three in the x-axis, plus the flex (0:1:0)");
  f.points.push_back(ProjPoint(0, 1, 0));
  for (const auto& a : {s1, s2, chord}) {
    f.points.push_back(ProjPoint::from_rational(a.x, a.y, Rational(1)));
    f.points.push_back(ProjPoint::from_rational(a.x, -a.y, Rational(1)));
  }
  for (const auto& a : {tangent, extra}) f.points.push_back(ProjPoint::from_rational(a.x, a.y, Rational(1)));
  for (const auto& p : f.points) require(f.curve->contains(p), f.name, "point on the cubic");
  require_distinct(f.points);
  require(is_smooth_cubic(*f.curve), f.name, "smooth cubic");
  require(curves_through(3, f.points, std::vector<int>(9, 1)).size() == 1, f.name, "unique cubic");
  return f;
}

Rational R(long p, long q = 1) { return Rational(Integer(p), Integer(q)); }

ProjPoint P(long a, long b, long c) { return ProjPoint(a, b, c); }

const std::vector<std::pair<std::string, std::function<FixtureSpec()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<FixtureSpec()>>> reg = {
      {"L4Q3-A", [] { return line_fixture("L4Q3-A", {0, 1, 2}, 1, ExpectedValue::exactly(R(16, 7)), "line/q3k4"); }},
      {"L4Q3-B", [] { return line_fixture("L4Q3-B", {1, 2}, 2, ExpectedValue::exactly(R(7, 3)), "line/q2k4"); }},
      {"L4Q3-C", [] { return line_fixture("L4Q3-C", {2}, 3, ExpectedValue::exactly(R(17, 7)), "line/q1k4"); }},
      {"L4Q3-D", [] { return line_fixture("L4Q3-D", {}, 4, ExpectedValue::exactly(R(5, 2)), "line/q0k4"); }},
      {"L5Q3-3QC",
       [] { return line_fixture("L5Q3-3QC", {0, 1, 2}, 2, ExpectedValue::exactly(R(7, 3)), "line/q3k5"); }},
      {"L5Q3-Y", [] { return line_fixture("L5Q3-Y", {1, 2}, 3, ExpectedValue::exactly(R(17, 7)), "line/q2k5"); }},
      {"L6Q3-Z", [] { return line_fixture("L6Q3-Z", {0, 1, 2}, 3, ExpectedValue::exactly(R(17, 7)), "line/q3k6"); }},
      {"LNQ3-52(8)", [] { return line_fixture("LNQ3-52(8)", {}, 5, ExpectedValue::exactly(R(5, 2)), "line/free"); }},
      {"LNQ3-52(9)", [] { return line_fixture("LNQ3-52(9)", {}, 6, ExpectedValue::exactly(R(5, 2)), "line/free"); }},
      {"LNQ3-52(10)",
       [] { return line_fixture("LNQ3-52(10)", {}, 7, ExpectedValue::exactly(R(5, 2)), "line/free"); }},
      {"CONIC5",
       [] {
         FixtureSpec f{"CONIC5", conic_pts({0, 1, 2, 3, -1}), ExpectedValue::exactly(R(2)), "conic/five", kConic, {}};
         require(incidence_profile(f.points).max_collinear == 2, f.name, "general position");
         return f;
       }},
      {"CONIC6+Q",
       [] {
         return conic_fixture("CONIC6+Q", conic_pts({0, 1, 2, 3, 4, 5}), P(0, 1, 1), 0,
                              ExpectedValue::exactly(R(5, 2)), "conic/6+1");
       }},
      {"CONIC6-TYPE1",
       [] {
         return conic_fixture("CONIC6-TYPE1", conic_pts({1, -1, 2, -2, 3, -3}), P(0, 1, 0), 3,
                              ExpectedValue::exactly(R(7, 3)), "conic/6+1/three-chords");
       }},
      {"CONIC6-TYPE2-i",
       [] {
         return conic_fixture("CONIC6-TYPE2-i", conic_pts({0, 1, 2, 3, 4, 5}), P(0, 1, 0), 0,
                              ExpectedValue::exactly(R(5, 2)), "conic/6+1/no-chord");
       }},
      {"CONIC6-TYPE2-ii",
       [] {
         return conic_fixture("CONIC6-TYPE2-ii", conic_pts({1, -1, 0, 2, 3, 4}), P(0, 1, 0), 1,
                              ExpectedValue::exactly(R(5, 2)), "conic/6+1/one-chord");
       }},
      {"CONIC6-TYPE2-iii",
       [] {
         return conic_fixture("CONIC6-TYPE2-iii", conic_pts({1, -1, 2, -2, 0, 3}), P(0, 1, 0), 2,
                              ExpectedValue::exactly(R(5, 2)), "conic/6+1/two-chords");
       }},
      {"CONIC7+Q-CONC3",
       [] {
         return conic_fixture("CONIC7+Q-CONC3", conic_pts({1, -1, 2, -2, 3, -3, 0}), P(0, 1, 0), 3,
                              ExpectedValue::exactly(R(5, 2)), "conic/7+1/three-chords");
       }},
      {"CONIC7+Q-SUB1",
       [] {
         return conic_fixture("CONIC7+Q-SUB1", conic_pts({0, 1, -1, 2, -2, 3, 4}), P(0, 1, 0), 2,
                              ExpectedValue::exactly(R(13, 5)), "conic/7+1/two-chords");
       }},
      {"CONIC7+Q-SUB2",
       [] {
         return conic_fixture("CONIC7+Q-SUB2", conic_pts({1, -1, 0, 2, 3, 4, 5}), P(0, 1, 0), 1,
                              ExpectedValue::exactly(R(13, 5)), "conic/7+1/one-chord");
       }},
      {"CONIC7+Q-SUB3",
       [] {
         return conic_fixture("CONIC7+Q-SUB3", conic_pts({0, 1, 2, 3, 4, 5, 6}), P(0, 1, 0), 0,
                              ExpectedValue::between(R(13, 5), std::nullopt), "conic/7+1/no-chord");
       }},
      {"CONIC8-CONC4",
       [] {
         return conic_fixture("CONIC8-CONC4", conic_pts({1, -1, 2, -2, 3, -3, 4, -4}), P(0, 1, 0), 4,
                              ExpectedValue::exactly(R(5, 2)), "conic/8+1/four-chords");
       }},
      {"CUBIC9", cubic9},
      {"NINE-72",
       [] {
         return seven_two("NINE-72", conic_pts({0, 1, 2, 3, 4, 5, 6}), P(0, 1, 0), P(1, 0, 1), 0, 0, false,
                          ExpectedValue::between(R(13, 5), R(3)), "nine/7+2/few-chords");
       }},
      {"NINE-72-1i",
       [] {
         Pts on = {conic_pt(3), conic_pt(-3), conic_pt(1, 3), conic_pt(-1, 3), conic_pt(1), conic_pt(-1), conic_pt(-2)};
         return seven_two("NINE-72-1i", on, P(0, 1, 0), P(9, -7, 1), 3, 3, true,
                          ExpectedValue::between(R(18, 7), R(3)), "nine/7+2/shared-chord/i");
       }},
      {"NINE-72-1ii",
       [] {
         Pts on = {conic_pt(1), conic_pt(-1), conic_pt(2), conic_pt(-2), conic_pt(-1, 2), conic_pt(1, 2), conic_pt(0)};
         return seven_two("NINE-72-1ii", on, P(0, 1, 0), P(1, 0, 1), 3, 3, true,
                          ExpectedValue::between(R(18, 7), R(3)), "nine/7+2/shared-chord/ii");
       }},
      {"NINE-72-2",
       [] {
         Pts on = {conic_pt(2),     conic_pt(-2),    conic_pt(1, 3), conic_pt(-1, 3),
                   conic_pt(1, 2), conic_pt(-1, 2), conic_pt(-3)};
         return seven_two("NINE-72-2", on, P(0, 1, 0), P(1, -1, -1), 3, 3, false,
                          ExpectedValue::between(R(122, 43), R(3)), "nine/7+2/no-shared-chord");
       }},
      {"NINE-63a",
       [] {
         Pts pts = concat(concat({kConicInf}, conic_pts({0, 1, -1, 2, -2})), {P(5, 1, 1), P(5, 2, 1), P(5, 3, 1)});
         return six_three("NINE-63a", pts, 0, ExpectedValue::exactly(R(3)), "nine/6+3/none");
       }},
      {"NINE-63b",
       [] {
         Pts pts = concat(concat({kConicInf}, conic_pts({0, 1, -1, 2, -2})), {P(1, 1, 0), P(1, 2, 0), P(1, 3, 0)});
         return six_three("NINE-63b", pts, 1, ExpectedValue::between(R(58, 23), R(3)), "nine/6+3/one");
       }},
      {"NINE-63c-1i",
       [] {
         Pts pts = concat(concat({kConicInf}, conic_pts({0, 1, -1, 2, -2})), {P(1, 0, 2), P(1, 0, 3), P(1, 0, 4)});
         return six_three("NINE-63c-1i", pts, 2, ExpectedValue::between(R(13, 5), R(3)), "nine/6+3/two/off/i");
       }},
      {"NINE-63c-1ii",
       [] {
         Pts base = concat({kConicInf}, conic_pts({0, 1, -1, 2, -2}));
         FixtureSpec f = six_three("NINE-63c-1ii", concat(base, {P(1, 0, 2), P(8, 0, 1), P(1, 0, 3)}), 2,
                                   ExpectedValue::between(R(53, 21), R(3)), "nine/6+3/two/off/ii");
         PlaneCurve c2 = conic_through({base[2], base[3], base[4], base[5], P(1, 0, 2)});
         require(c2.contains(P(8, 0, 1)), f.name, "second external point on the auxiliary conic");
         return f;
       }},
      {"NINE-63c-2",
       [] {
         Pts pts = {P(4, 2, 1), P(4, -2, 1), P(1, 0, 0), P(0, 0, 1), P(1, 1, 1),
                    P(1, -1, 1), P(4, 0, 1), P(4, 1, 1), P(4, -1, 1)};
         return six_three("NINE-63c-2", pts, 2, ExpectedValue::between(R(13, 5), R(3)), "nine/6+3/two/lines");
       }},
      {"NINE-63c-3i",
       [] {
         Pts pts = {P(1, 0, 0), P(0, 0, 1), P(1, 1, 1), P(4, 2, 1), P(4, -2, 1),
                    P(1, -1, 1), P(2, 0, 1), P(1, 0, 1), P(4, 0, 1)};
         return six_three("NINE-63c-3i", pts, 2, ExpectedValue::exactly(R(13, 5)), "nine/6+3/two/one-diagonal/i");
       }},
      {"NINE-63c-3ii",
       [] {
         Pts pts = {P(4, 2, 1), P(1, -2, 4), P(1, 0, 0), P(0, 0, 1), P(1, 1, 1),
                    P(1, -1, 1), P(1, 0, 1), P(1, 2, -2), P(2, 2, -1)};
         return six_three("NINE-63c-3ii", pts, 2, ExpectedValue::exactly(R(13, 5)), "nine/6+3/two/one-diagonal/ii");
       }},
      {"NINE-63c-3x",
       [] {
         Pts pts = {P(1, -1, 1), P(4, 2, 1), P(1, 0, 0), P(0, 0, 1), P(1, 1, 1),
                    P(4, -2, 1), P(2, 0, 1), P(3, 1, 1), P(0, 2, -1)};
         return six_three("NINE-63c-3x", pts, 2, ExpectedValue::between(R(53, 21), R(3)),
                          "nine/6+3/two/one-diagonal/mixed");
       }},
      {"NINE-63c-4",
       [] {
         Pts pts = {P(1, 1, 1), P(1, -1, 1), P(1, 0, 0), P(0, 0, 1), P(4, 2, 1),
                    P(1, 2, 4), P(1, 0, 1), P(1, 2, 1), P(2, 1, 2)};
         return six_three("NINE-63c-4", pts, 2, ExpectedValue::between(R(59, 23), R(3)), "nine/6+3/two/two-diagonal");
       }},
      {"NINE-54",
       [] {
         Pts pts = concat(conic_pts({0, 1, -1, 2, -2}), {P(5, 1, 1), P(5, 2, 1), P(5, 3, 1), P(5, 4, 1)});
         FixtureSpec f{"NINE-54", pts, ExpectedValue::between(R(14, 5), R(3)), "nine/5+4", std::nullopt, {}};
         IncidenceProfile prof = incidence_profile(pts);
         require(prof.max_collinear == 4, f.name, "four on a line");
         require(prof.conic_subsets.empty(), f.name, "no six on an irreducible conic");
         return f;
       }},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, _] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

FixtureSpec fixture(const std::string& name) {
  for (const auto& [n, make] : registry())
    if (n == name) return make();
  throw UnknownFixtureError("unknown fixture: " + name);
}

std::optional<FixtureSpec> table_row(int row, int n) {
  if (n < 7 || n > 10) return std::nullopt;
  const std::string tag = "row" + std::to_string(row) + "-n" + std::to_string(n);
  auto on_line = [](int count) {
    Pts out;
    for (int i = 0; i < count; ++i) out.push_back(P(1, i, 0));
    return out;
  };
  switch (row) {
    case 1:
      return FixtureSpec{tag, on_line(n), ExpectedValue::exactly(R(1)), "line/all", std::nullopt, {}};
    case 2:
      return FixtureSpec{tag, concat(on_line(n - 1), {P(0, 0, 1)}), ExpectedValue::exactly(R(2 * n - 3, n - 1)),
                         "line/n-1", std::nullopt, {}};
    case 3:
      return FixtureSpec{tag, concat(on_line(n - 2), {P(0, 0, 1), P(1, 1, 1)}), ExpectedValue::exactly(R(2)),
                         "line/n-2", std::nullopt, {}};
    case 4:
      if (n == 7) return fixture("L4Q3-A");
      return std::nullopt;
    case 5:
      if (n == 7) return fixture("L4Q3-B");
      if (n == 8) return fixture("L5Q3-3QC");
      return std::nullopt;
    case 6:
      if (n == 7) return fixture("L4Q3-C");
      if (n == 8) return fixture("L5Q3-Y");
      if (n == 9) return fixture("L6Q3-Z");
      return std::nullopt;
    case 7:
      if (n == 7) return fixture("L4Q3-D");
      return fixture("LNQ3-52(" + std::to_string(n) + ")");
    default:
      return std::nullopt;
  }
}

}  // namespace wald
