#include <doctest.h>

#include <random>

#include "wald/audit.hpp"
#include "wald/classifier.hpp"
#include "wald/errors.hpp"
#include "wald/fixtures.hpp"

using namespace wald;

namespace {

ClassifyConfig quick() {
  ClassifyConfig cfg;
  cfg.sweep_intervals = false;
  return cfg;
}

Rational table_value(std::size_t q, std::size_t k) {
  if (k - q >= 4) return Rational(5, 2);
  if (q == 3 && k == 4) return Rational(16, 7);
  if (q == 3 && k == 5) return Rational(7, 3);
  if (q == 3 && k == 6) return Rational(17, 7);
  if (q == 2 && k == 4) return Rational(7, 3);
  if (q == 2 && k == 5) return Rational(17, 7);
  if (q == 1 && k == 4) return Rational(17, 7);
  throw std::logic_error("unreachable (q, k)");
}

void check_certified(const ClassificationResult& r) {
  REQUIRE(r.exact);
  REQUIRE(r.lower_cert);
  REQUIRE(r.upper_evidence);
  CHECK(verify_certificate(*r.lower_cert).ok);
  CHECK(r.lower_cert->bound == *r.exact);
  CHECK(r.upper_evidence->bound == *r.exact);
  CHECK(r.lower == *r.exact);
  CHECK(r.upper == *r.exact);
}

}  // namespace

TEST_SUITE("classifier") {
  TEST_CASE("classify examples") {
    std::vector<ProjPoint> col;
    for (long i = 0; i < 9; ++i) col.push_back(ProjPoint(1, i, 0));
    ClassificationResult r = classify(col);
    REQUIRE(r.exact);
    CHECK(*r.exact == 1);
    CHECK_FALSE(r.citations.empty());

    struct Case {
      const char* name;
      Rational v;
    };
    for (const Case& c : {Case{"CONIC6-TYPE1", Rational(7, 3)}, Case{"CONIC8-CONC4", Rational(5, 2)},
                          Case{"L4Q3-C", Rational(17, 7)}, Case{"CUBIC9", Rational(3)}}) {
      INFO(c.name);
      ClassificationResult res = classify(fixture(c.name).points, quick());
      REQUIRE(res.exact);
      CHECK(*res.exact == c.v);
      check_certified(res);
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(classify({ProjPoint(1, 0, 0), ProjPoint(2, 0, 0)}), DuplicatePointError);
    CHECK_THROWS_AS(classify({}), ParseError);
  }

  TEST_CASE("collinear rows of the summary table") {
    for (long n = 7; n <= 10; ++n) {
      std::vector<ProjPoint> all, minus1, minus2;
      for (long i = 0; i < n; ++i) all.push_back(ProjPoint(1, i, 0));
      minus1.assign(all.begin(), all.end() - 1);
      minus1.push_back(ProjPoint(0, 0, 1));
      minus2.assign(all.begin(), all.end() - 2);
      minus2.push_back(ProjPoint(0, 0, 1));
      minus2.push_back(ProjPoint(1, 1, 1));
      CHECK(*classify(all).exact == 1);
      CHECK(*classify(minus1).exact == Rational(2 * n - 3, n - 1));
      CHECK(*classify(minus2).exact == 2);
      // Residual triple collinear.
      std::vector<ProjPoint> flat(all.begin(), all.end() - 3);
      for (long i = 1; i <= 3; ++i) flat.push_back(ProjPoint(1, i, 1));
      CHECK(*classify(flat).exact == 2);
    }
  }

  TEST_CASE("line-plus-triangle split is total and matches the table") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> c(-5, 5);
    const PlaneCurve l = line_through(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0));
    int generated = 0;
    while (generated < 60) {
      std::vector<ProjPoint> tri = {ProjPoint(c(rng), c(rng), 1), ProjPoint(c(rng), c(rng), 1),
                                    ProjPoint(c(rng), c(rng), 1)};
      if (tri[0] == tri[1] || tri[0] == tri[2] || tri[1] == tri[2] || collinear(tri[0], tri[1], tri[2])) continue;
      std::vector<ProjPoint> hits;
      bool ok = true;
      for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        ProjPoint h = meet(line_through(tri[a], tri[b]), l);
        if (std::find(hits.begin(), hits.end(), h) != hits.end()) ok = false;
        hits.push_back(h);
      }
      if (!ok) continue;
      std::size_t q = rng() % 4, k = 4 + rng() % 4;
      if (q > k) continue;
      std::vector<ProjPoint> on(hits.begin(), hits.begin() + static_cast<long>(q));
      for (long t = 0; on.size() < k; ++t) {
        ProjPoint p(1, t - 3, 0);
        if (std::find(hits.begin(), hits.end(), p) == hits.end() &&
            std::find(on.begin(), on.end(), p) == on.end())
          on.push_back(p);
      }
      std::vector<ProjPoint> pts = on;
      pts.insert(pts.end(), tri.begin(), tri.end());
      std::shuffle(pts.begin(), pts.end(), rng);
      INFO("q=" << q << " k=" << k);
      ClassificationResult r = classify(pts, quick());
      REQUIRE(r.exact);
      CHECK(*r.exact == table_value(q, k));
      CHECK(r.family.rfind("line.", 0) == 0);
      ++generated;
    }
  }

  TEST_CASE("exact fixtures are certified") {
    for (const auto& name : fixture_names()) {
      FixtureSpec f = fixture(name);
      if (!f.expected || !f.expected->exact) continue;
      INFO(name);
      ClassificationResult r = classify(f.points, quick());
      REQUIRE(r.exact);
      CHECK(*r.exact == *f.expected->exact);
      check_certified(r);
    }
  }

  TEST_CASE("interval fixtures respect their bounds") {
    for (const auto& name : fixture_names()) {
      FixtureSpec f = fixture(name);
      if (!f.expected || f.expected->exact) continue;
      INFO(name);
      ClassificationResult r = classify(f.points, quick());
      CHECK(r.lower <= r.upper);
      CHECK(r.lower >= f.expected->lower);
      if (f.expected->upper) CHECK(r.upper <= *f.expected->upper);
      if (r.lower_cert) CHECK(verify_certificate(*r.lower_cert).ok);
      CHECK_FALSE(r.notes.empty());
    }
  }

  TEST_CASE("fallback stays consistent") {
    std::vector<ProjPoint> pts = {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1),
                                  ProjPoint(1, 1, 1), ProjPoint(1, 2, 3), ProjPoint(2, -1, 5)};
    ClassificationResult r = classify(pts);
    CHECK(r.family == "fallback");
    CHECK(r.lower <= r.upper);
    REQUIRE(r.lower_cert);
    CHECK(verify_certificate(*r.lower_cert).ok);
    for (const auto& e : r.sweep) CHECK(e.ratio >= r.lower);
    ClassificationResult two = classify({ProjPoint(1, 0, 0), ProjPoint(0, 1, 0)});
    CHECK(two.lower <= two.upper);
  }

  TEST_CASE("classification is projectively invariant") {
    std::mt19937_64 rng(43);
    for (const char* name : {"L4Q3-B", "CONIC6-TYPE2-ii", "CONIC7+Q-SUB2", "NINE-63a", "NINE-63c-3ii"}) {
      auto pts = fixture(name).points;
      ClassificationResult base = classify(pts, quick());
      for (int t = 0; t < 3; ++t) {
        ClassificationResult r = classify(transform_all(random_unimodular(rng), pts), quick());
        CHECK(r.family == base.family);
        CHECK(r.exact == base.exact);
        CHECK(r.lower == base.lower);
      }
    }
  }
}
