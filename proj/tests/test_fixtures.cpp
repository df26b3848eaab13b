#include <doctest.h>

#include "wald/errors.hpp"
#include "wald/fixtures.hpp"
#include "wald/geometry.hpp"
#include "wald/json_io.hpp"

using namespace wald;

TEST_SUITE("fixtures") {
  TEST_CASE("registry covers the named configurations") {
    const auto& names = fixture_names();
    for (const char* n : {"L4Q3-A", "L4Q3-B", "L4Q3-C", "L4Q3-D", "L5Q3-3QC", "L5Q3-Y", "L6Q3-Z", "LNQ3-52(8)",
                          "LNQ3-52(9)", "LNQ3-52(10)", "CONIC5", "CONIC6+Q", "CONIC6-TYPE1", "CONIC6-TYPE2-i",
                          "CONIC6-TYPE2-ii", "CONIC6-TYPE2-iii", "CONIC7+Q-CONC3", "CONIC7+Q-SUB1", "CONIC7+Q-SUB2",
                          "CONIC7+Q-SUB3", "CONIC8-CONC4", "CUBIC9", "NINE-72", "NINE-63a", "NINE-63b", "NINE-54"})
      CHECK_MESSAGE(std::find(names.begin(), names.end(), n) != names.end(), n);
    CHECK_THROWS_AS(fixture("NO-SUCH"), UnknownFixtureError);
  }

  TEST_CASE("fixture examples") {
    FixtureSpec c5 = fixture("CONIC5");
    std::vector<ProjPoint> want;
    for (long t : {0, 1, 2, 3, -1}) want.push_back(ProjPoint(t * t, t, 1));
    CHECK(c5.points == want);
    REQUIRE(fixture("L4Q3-D").expected);
    CHECK(*fixture("L4Q3-D").expected->exact == Rational(5, 2));
    FixtureSpec c4 = fixture("CONIC8-CONC4");
    std::vector<ProjPoint> eight(c4.points.begin(), c4.points.end() - 1);
    CHECK(concurrency_count_at(c4.points.back(), eight) == 4);
  }

  TEST_CASE("every fixture is well formed") {
    for (const auto& name : fixture_names()) {
      INFO(name);
      FixtureSpec f = fixture(name);
      CHECK(f.name == name);
      CHECK_NOTHROW(require_distinct(f.points));
      CHECK_FALSE(f.figure_ref.empty());
      REQUIRE(f.expected);
      if (f.expected->exact) {
        CHECK(f.expected->lower == *f.expected->exact);
      } else if (f.expected->upper) {
        CHECK(f.expected->lower <= *f.expected->upper);
      }
      if (f.curve)
        for (const auto& p : f.points)
          if (f.curve->degree() == 3) CHECK(f.curve->contains(p));
    }
  }

  TEST_CASE("conic fixtures sit on the standard conic") {
    const PlaneCurve conic(2, {Rational(0), Rational(0), Rational(1), Rational(-1), Rational(0), Rational(0)});
    for (const auto& name : fixture_names()) {
      if (name.rfind("CONIC", 0) != 0) continue;
      FixtureSpec f = fixture(name);
      std::size_t on = 0;
      for (const auto& p : f.points) on += conic.contains(p);
      CHECK(on + (name == "CONIC5" ? 0 : 1) == f.points.size());
    }
  }

  TEST_CASE("generation is deterministic") {
    for (const auto& name : fixture_names()) {
      std::string a = io::to_json(fixture(name)).dump();
      std::string b = io::to_json(fixture(name)).dump();
      CHECK(a == b);
    }
  }

  TEST_CASE("summary table rows") {
    for (int n = 7; n <= 10; ++n) {
      for (int row = 1; row <= 7; ++row) {
        auto f = table_row(row, n);
        if (!f) continue;
        INFO("row " << row << " n " << n);
        CHECK(f->points.size() == static_cast<std::size_t>(n));
      }
      CHECK(table_row(1, n));
      CHECK(table_row(7, n));
    }
    CHECK_FALSE(table_row(8, 7));
  }
}
