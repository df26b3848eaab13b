#include <doctest.h>

#include "oracles.hpp"
#include "wald/bezout_lp.hpp"
#include "wald/engine.hpp"
#include "wald/errors.hpp"
#include "wald/fixtures.hpp"
#include "wald/golden_systems.hpp"

using namespace wald;

namespace {

FormalDivisor triangle_divisor(const std::vector<ProjPoint>& pts) {
  const std::size_t n = pts.size();
  FormalDivisor dv;
  dv.m = 2;
  dv.terms.push_back({line_through(pts[n - 3], pts[n - 2]), 1, "L1"});
  dv.terms.push_back({line_through(pts[n - 3], pts[n - 1]), 1, "L2"});
  dv.terms.push_back({line_through(pts[n - 2], pts[n - 1]), 1, "L3"});
  dv.terms.push_back({line_through(pts[0], pts[1]), 2, "L"});
  return dv;
}

LowerBoundCertificate golden_cert(const char* name) {
  const auto& g = golden_system(name);
  return certificate_from_multipliers(g.system, g.multipliers);
}

}  // namespace

TEST_SUITE("waldschmidt-engine") {
  TEST_CASE("verify_upper examples") {
    auto d = fixture("L4Q3-D").points;
    CHECK(verify_upper(triangle_divisor(d), d) == Rational(5, 2));

    FixtureSpec c = fixture("CONIC6+Q");
    std::vector<ProjPoint> six(c.points.begin(), c.points.end() - 1);
    FormalDivisor dv;
    dv.m = 2;
    dv.terms.push_back({cubic_with_double_point(six, c.points.back()), 1, "c"});
    dv.terms.push_back({*c.curve, 1, "C"});
    CHECK(verify_upper(dv, c.points) == Rational(5, 2));

    std::vector<ProjPoint> col;
    for (long i = 0; i < 5; ++i) col.push_back(ProjPoint(1, i, 0));
    FormalDivisor one;
    one.terms.push_back({line_through(col[0], col[1]), 1, "L"});
    CHECK(verify_upper(one, col) == 1);
  }

  TEST_CASE("verify_upper rejects insufficient divisors") {
    auto d = fixture("L4Q3-D").points;
    FormalDivisor dv = triangle_divisor(d);
    dv.terms[3].coeff = 1;
    CHECK_THROWS_AS(verify_upper(dv, d), InsufficientMultiplicityError);
    dv = triangle_divisor(d);
    dv.m = 3;
    CHECK_THROWS_AS(verify_upper(dv, d), InsufficientMultiplicityError);
  }

  TEST_CASE("verify_upper agrees with the expanded product") {
    for (const char* name : {"L4Q3-D", "L4Q3-B", "CONIC5"}) {
      auto pts = fixture(name).points;
      for (int m = 1; m <= 3; ++m) {
        FormalDivisor dv;
        dv.m = m;
        for (std::size_t i = 0; i + 1 < pts.size(); i += 2)
          dv.terms.push_back({line_through(pts[i], pts[i + 1]), static_cast<long>(m % 2 + 1), ""});
        dv.terms.push_back({line_through(pts.back(), pts[0]), 1, ""});
        PlaneCurve prod = dv.expand();
        bool ok = true;
        for (const auto& p : pts) ok = ok && oracle::brute_mult(prod, p) >= static_cast<std::size_t>(m);
        if (ok) {
          CHECK(verify_upper(dv, pts) == Rational(dv.degree(), m));
        } else {
          CHECK_THROWS_AS(verify_upper(dv, pts), InsufficientMultiplicityError);
        }
      }
    }
  }

  TEST_CASE("sweep examples") {
    Engine eng;
    auto a = fixture("L4Q3-A").points;
    auto tr = eng.sweep(a, 7, Rational(16, 7));
    REQUIRE(tr.size() == 7);
    CHECK(tr[0].alpha == 3);
    CHECK(tr[0].ratio == 3);
    CHECK(tr[6].alpha == 16);
    CHECK(tr.back().running_min == Rational(16, 7));
    for (std::size_t i = 1; i < tr.size(); ++i) CHECK(tr[i].running_min <= tr[i - 1].running_min);
    for (const auto& e : tr) CHECK(e.ratio >= Rational(16, 7));

    auto single = eng.sweep({ProjPoint(0, 0, 1)}, 3);
    REQUIRE(single.size() == 3);
    for (const auto& e : single) CHECK(e.ratio == 1);
  }

  TEST_CASE("sweep hint does not change values") {
    Engine plain, hinted;
    auto pts = fixture("L4Q3-C").points;
    auto a = plain.sweep(pts, 4);
    auto b = hinted.sweep(pts, 4, Rational(17, 7));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].alpha == b[i].alpha);
  }

  TEST_CASE("memoization") {
    Engine eng;
    auto pts = fixture("CONIC5").points;
    CHECK(eng.memo_size() == 0);
    eng.sweep(pts, 3);
    CHECK(eng.memo_size() == 3);
    AlphaResult r = eng.alpha(pts, 2);
    CHECK(eng.memo_size() == 3);
    CHECK(r.alpha == 4);
    std::vector<ProjPoint> shuffled(pts.rbegin(), pts.rend());
    CHECK(scheme_key(shuffled) == scheme_key(pts));
    eng.alpha(shuffled, 3);
    CHECK(eng.memo_size() == 3);
  }

  TEST_CASE("conclude examples") {
    auto d = fixture("L4Q3-D").points;
    UpperEvidence con{UpperEvidence::Kind::construction, Rational(5, 2), triangle_divisor(d), std::nullopt};
    WaldschmidtResult r = conclude({golden_cert("line4-q0")}, {con}, {});
    REQUIRE(r.exact);
    CHECK(*r.exact == Rational(5, 2));

    SweepEntry e{5, 13, Rational(13, 5), Rational(13, 5)};
    UpperEvidence sw{UpperEvidence::Kind::sweep, Rational(13, 5), std::nullopt, e};
    WaldschmidtResult r2 = conclude({golden_cert("conic7-c0")}, {sw}, {e});
    REQUIRE(r2.exact);
    CHECK(*r2.exact == Rational(13, 5));

    UpperEvidence three{UpperEvidence::Kind::construction, Rational(3), std::nullopt, std::nullopt};
    WaldschmidtResult r3 = conclude({golden_cert("nine54")}, {three}, {});
    CHECK_FALSE(r3.exact);
    CHECK(r3.lower == Rational(14, 5));
    CHECK(r3.upper == 3);
  }

  TEST_CASE("conclude takes the best bounds and flags inconsistency") {
    UpperEvidence three{UpperEvidence::Kind::construction, Rational(3), std::nullopt, std::nullopt};
    SweepEntry e{7, 20, Rational(20, 7), Rational(20, 7)};
    WaldschmidtResult r = conclude({golden_cert("conic7-c0"), golden_cert("nine54")}, {three}, {e});
    CHECK(r.lower == Rational(14, 5));
    CHECK(r.upper == Rational(20, 7));
    CHECK_FALSE(r.exact);
    UpperEvidence low{UpperEvidence::Kind::construction, Rational(2), std::nullopt, std::nullopt};
    CHECK_THROWS_AS(conclude({golden_cert("nine54")}, {low}, {}), InconsistentBoundsError);
  }
}
