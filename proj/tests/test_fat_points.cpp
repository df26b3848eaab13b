#include <doctest.h>

#include "oracles.hpp"
#include "wald/audit.hpp"
#include "wald/errors.hpp"
#include "wald/fat_points.hpp"
#include "wald/fixtures.hpp"

using namespace wald;

namespace {

std::vector<ProjPoint> pts_of(const char* name) { return fixture(name).points; }

const std::vector<const char*> kSmall = {"L4Q3-A", "L4Q3-B", "L4Q3-C", "L4Q3-D", "CONIC5", "CONIC6+Q",
                                         "CONIC6-TYPE1"};

void check_modular(const RatMatrix& m) {
  std::size_t exact = rank_exact(m);
  for (std::uint64_t p : kDefaultPrimes) CHECK(rank_modular(m, p) == exact);
}

}  // namespace

TEST_SUITE("fat-points") {
  TEST_CASE("interpolation matrix shapes") {
    auto one = FatPointScheme::uniform({ProjPoint(1, 2, 3)}, 1);
    RatMatrix m = interpolation_matrix(one, 1);
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 3);
    CHECK(rank_exact(m) == 1);

    auto dbl = FatPointScheme::uniform({ProjPoint(1, 2, 3)}, 2);
    RatMatrix m2 = interpolation_matrix(dbl, 1);
    CHECK(m2.rows() == 3);
    CHECK(rank_exact(m2) == 3);

    auto d = FatPointScheme::uniform(pts_of("L4Q3-D"), 1);
    RatMatrix md = interpolation_matrix(d, 2);
    CHECK(md.rows() == 7);
    CHECK(md.cols() == 6);
    CHECK(rank_exact(md) == 6);

    auto mixed = FatPointScheme({ProjPoint(1, 0, 0), ProjPoint(0, 1, 0)}, {3, 1});
    CHECK(mixed.condition_count() == 7);
    CHECK(interpolation_matrix(mixed, 4).rows() == 7);
    CHECK(interpolation_matrix(mixed, 4).cols() == 15);
  }

  TEST_CASE("scheme validation") {
    CHECK_THROWS_AS(FatPointScheme({ProjPoint(1, 0, 0)}, {0}), ParseError);
    CHECK_THROWS_AS(FatPointScheme({ProjPoint(1, 0, 0), ProjPoint(2, 0, 0)}, {1, 1}), DuplicatePointError);
    CHECK_THROWS(FatPointScheme({ProjPoint(1, 0, 0)}, {1, 1}));
    CHECK(FatPointScheme::uniform(pts_of("CONIC5"), 3).uniform_mult() == 3);
    CHECK_FALSE(FatPointScheme({ProjPoint(1, 0, 0), ProjPoint(0, 1, 0)}, {1, 2}).uniform_mult());
  }

  TEST_CASE("ideal dimension examples") {
    CHECK(ideal_dimension(FatPointScheme::uniform({ProjPoint(0, 0, 1)}, 1), 1) == 2);
    CHECK(ideal_dimension(FatPointScheme::uniform(pts_of("CONIC5"), 1), 2) == 1);
    CHECK(ideal_dimension(FatPointScheme::uniform(pts_of("L4Q3-D"), 1), 2) == 0);
  }

  TEST_CASE("alpha examples") {
    AlphaResult one = alpha(FatPointScheme::uniform({ProjPoint(0, 0, 1)}, 1));
    CHECK(one.alpha == 1);
    AlphaResult d = alpha(FatPointScheme::uniform(pts_of("L4Q3-D"), 2));
    CHECK(d.alpha == 5);
    AlphaResult a = alpha(FatPointScheme::uniform(pts_of("L4Q3-A"), 7), Rational(16, 7));
    CHECK(a.alpha == 16);
    AlphaResult a1 = alpha(FatPointScheme::uniform(pts_of("L4Q3-A"), 1));
    CHECK(a1.alpha == 3);
  }

  TEST_CASE("hilbert function examples") {
    CHECK(hilbert_function(FatPointScheme::uniform(pts_of("L4Q3-D"), 1), 6) == 7);
    CHECK(hilbert_function(FatPointScheme::uniform(pts_of("L4Q3-A"), 1), 1) == 3);
    for (int d = 1; d <= 5; ++d) CHECK(hilbert_function(FatPointScheme::uniform({ProjPoint(4, 1, 1)}, 1), d) == 1);
  }

  TEST_CASE("hilbert function stabilizes at n for reduced schemes") {
    for (const auto& name : fixture_names()) {
      auto pts = fixture(name).points;
      auto s = FatPointScheme::uniform(pts, 1);
      int n = static_cast<int>(pts.size());
      for (int d = n - 1; d <= n + 1; ++d) CHECK(hilbert_function(s, d) == pts.size());
    }
  }

  TEST_CASE("alpha agrees with the brute-force oracle") {
    for (const char* name : kSmall) {
      auto pts = pts_of(name);
      for (int m = 1; m <= 2; ++m) {
        INFO(name << " m=" << m);
        AlphaResult r = alpha(FatPointScheme::uniform(pts, m));
        CHECK(r.alpha == oracle::brute_alpha(pts, m));
      }
    }
    std::vector<ProjPoint> four = {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1), ProjPoint(1, 1, 1)};
    CHECK(alpha(FatPointScheme::uniform(four, 3)).alpha == oracle::brute_alpha(four, 3));
  }

  TEST_CASE("witness and trace soundness") {
    for (const char* name : kSmall) {
      auto pts = pts_of(name);
      for (int m = 1; m <= 3; ++m) {
        AlphaResult r = alpha(FatPointScheme::uniform(pts, m));
        CHECK(r.m == m);
        CHECK(r.witness.degree() == r.alpha);
        for (const auto& p : pts) CHECK(mult_at(r.witness, p) >= static_cast<std::size_t>(m));
        REQUIRE_FALSE(r.h0_trace.empty());
        for (const auto& [d, dim] : r.h0_trace) {
          if (d < r.alpha) CHECK(dim == 0);
          else CHECK(dim >= 1);
        }
        CHECK(r.h0_trace.back().first == r.alpha);
      }
    }
  }

  TEST_CASE("monotone growth and subadditivity") {
    for (const auto& name : fixture_names()) {
      auto pts = fixture(name).points;
      std::vector<int> a(5);
      for (int m = 1; m <= 4; ++m) a[m] = alpha(FatPointScheme::uniform(pts, m)).alpha;
      INFO(name);
      for (int m = 1; m < 4; ++m) CHECK(a[m + 1] >= a[m] + 1);
      for (int m1 = 1; m1 <= 4; ++m1)
        for (int m2 = 1; m1 + m2 <= 4; ++m2) CHECK(a[m1 + m2] <= a[m1] + a[m2]);
    }
  }

  TEST_CASE("expected dimension bound") {
    for (const char* name : kSmall) {
      auto pts = pts_of(name);
      for (int m = 1; m <= 3; ++m) {
        auto s = FatPointScheme::uniform(pts, m);
        for (int d = 1; d <= 3 * m + 2; ++d) {
          long expected = static_cast<long>(monomial_count(d)) - static_cast<long>(s.condition_count());
          CHECK(static_cast<long>(ideal_dimension(s, d)) >= expected);
        }
      }
    }
  }

  TEST_CASE("modular rank agrees on interpolation matrices") {
    for (const auto& name : fixture_names()) {
      auto pts = fixture(name).points;
      for (int m = 1; m <= 3; ++m) {
        auto s = FatPointScheme::uniform(pts, m);
        int a = alpha(s).alpha;
        for (int d = std::max(1, a - 1); d <= a + 1; ++d) check_modular(interpolation_matrix(s, d));
      }
    }
  }

  TEST_CASE("chart reduction keeps the rank of the full derivative matrix") {
    for (const char* name : {"L4Q3-B", "CONIC5", "CONIC6+Q"}) {
      auto pts = pts_of(name);
      for (int m = 1; m <= 3; ++m)
        for (int d = 1; d <= 2 * m + 1; ++d)
          CHECK(rank_exact(interpolation_matrix(FatPointScheme::uniform(pts, m), d)) ==
                oracle::naive_rank(oracle::full_condition_matrix(pts, m, d)));
    }
  }

  TEST_CASE("alpha is projectively invariant") {
    std::mt19937_64 rng(23);
    for (const char* name : {"L4Q3-C", "CONIC6-TYPE1"}) {
      auto pts = pts_of(name);
      int base = alpha(FatPointScheme::uniform(pts, 2)).alpha;
      for (int t = 0; t < 5; ++t) {
        auto moved = transform_all(random_unimodular(rng), pts);
        CHECK(alpha(FatPointScheme::uniform(moved, 2)).alpha == base);
      }
    }
  }
}
