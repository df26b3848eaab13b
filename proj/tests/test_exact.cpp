#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wald/errors.hpp"
#include "wald/fat_points.hpp"
#include "wald/fixtures.hpp"
#include "wald/matrix.hpp"

using namespace wald;

namespace {

RatMatrix conic5_matrix() {
  FatPointScheme s = FatPointScheme::uniform(fixture("CONIC5").points, 1);
  return interpolation_matrix(s, 2);
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int rank_cap) {
  std::uniform_int_distribution<int> v(-4, 4);
  std::vector<RatVector> basis;
  for (int k = 0; k < rank_cap; ++k) {
    RatVector b(c);
    for (auto& x : b) x = Rational(Integer(v(rng)), Integer(1 + std::abs(v(rng))));
    basis.push_back(b);
  }
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < r; ++i) {
    RatVector row(c);
    for (const auto& b : basis) {
      Rational f(v(rng));
      for (std::size_t j = 0; j < c; ++j) row[j] += f * b[j];
    }
    rows.push_back(row);
  }
  return RatMatrix::from_rows(rows);
}

}  // namespace

TEST_SUITE("exact-arith") {
  TEST_CASE("rationals stay canonical") {
    Rational a(Integer(6), Integer(-4));
    CHECK(a.str() == "-3/2");
    CHECK(a.is_canonical());
    CHECK((a * Rational(2, 3)).str() == "-1");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(-7, 3).ceil() == -2);
    CHECK(Rational(16, 7) < Rational(7, 3));
  }

  TEST_CASE("canonical form survives random arithmetic") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> v(-50, 50);
    Rational acc(1);
    for (int i = 0; i < 200; ++i) {
      Rational x(Integer(v(rng)), Integer(1 + std::abs(v(rng))));
      switch (i % 4) {
        case 0: acc += x; break;
        case 1: acc -= x; break;
        case 2: acc *= x; break;
        default:
          if (!x.is_zero()) acc /= x;
      }
      CHECK(acc.is_canonical());
      CHECK(Rational::parse(acc.str()) == acc);
    }
  }

  TEST_CASE("rank examples") {
    RatMatrix id = RatMatrix::from_rows({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK(rank_exact(id) == 2);
    RatMatrix ones(3, 3, std::vector<Rational>(9, Rational(1)));
    CHECK(rank_exact(ones) == 1);
    CHECK(rank_exact(RatMatrix()) == 0);
    RatMatrix c5 = conic5_matrix();
    CHECK(c5.rows() == 5);
    CHECK(c5.cols() == 6);
    CHECK(rank_exact(c5) == 5);
    CHECK(oracle::naive_rank(c5) == 5);
  }

  TEST_CASE("nullspace examples") {
    auto k = nullspace(RatMatrix::from_rows({{Rational(1), Rational(1)}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RatVector{Rational(1), Rational(-1)});
    RatMatrix id = RatMatrix::from_rows({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK(nullspace(id).empty());

    // Nine conditions on cubics: six simple points and one double point.
    FixtureSpec f = fixture("CONIC6+Q");
    std::vector<int> mults(f.points.size(), 1);
    mults.back() = 2;
    RatMatrix m = interpolation_matrix(FatPointScheme(f.points, mults), 3);
    CHECK(m.rows() == 9);
    CHECK(m.cols() == 10);
    auto basis = nullspace(m);
    CHECK(basis.size() >= 1);
    for (const auto& v : basis)
      for (const auto& x : m.apply(v)) CHECK(x.is_zero());
  }

  TEST_CASE("modular rank examples") {
    RatMatrix id = RatMatrix::from_rows({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK(rank_modular(id, 5) == 2);
    RatMatrix prop = RatMatrix::from_rows({{Rational(2), Rational(4)}, {Rational(1), Rational(2)}});
    CHECK(rank_modular(prop, 7) == 1);
    CHECK(rank_modular(conic5_matrix(), 10007) == rank_exact(conic5_matrix()));
    RatMatrix bad = RatMatrix::from_rows({{Rational(1, 5), Rational(1)}});
    CHECK_THROWS_AS(rank_modular(bad, 5), BadPrimeError);
    // Drops rank when p divides a pivot.
    RatMatrix drop = RatMatrix::from_rows({{Rational(5), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK(rank_modular(drop, 5) == 1);
    CHECK(rank_certified(drop) == 2);
  }

  TEST_CASE("rank properties on random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 2 + trial % 6, c = 2 + (trial * 5) % 7;
      RatMatrix m = random_matrix(rng, r, c, 1 + trial % 4);
      std::size_t rk = rank_exact(m);
      CHECK(rk == oracle::naive_rank(m));
      CHECK(rk == rank_exact(m.transpose()));
      CHECK(rk == rank_certified(m));
      for (std::uint64_t p : {1000003ULL, 1000033ULL, 3ULL}) {
        std::optional<std::size_t> mod;
        try {
          mod = rank_modular(m, p);
        } catch (const BadPrimeError&) {
        }
        if (mod) CHECK(*mod <= rk);
      }
      auto ker = nullspace(m);
      CHECK(ker.size() == c - rk);
      for (const auto& v : ker) {
        for (const auto& x : m.apply(v)) CHECK(x.is_zero());
        CHECK(v == primitive_integer(v));
      }
      KernelProbe probe = first_kernel_vector(m);
      CHECK(probe.rank == rk);
      CHECK(probe.first.has_value() == !ker.empty());
      if (probe.first) CHECK(*probe.first == ker.front());
    }
  }

  TEST_CASE("first kernel vector matches nullspace on interpolation matrices") {
    for (const char* name : {"L4Q3-A", "CONIC6-TYPE1", "NINE-63c-4"}) {
      FatPointScheme s = FatPointScheme::uniform(fixture(name).points, 2);
      for (int d = 4; d <= 6; ++d) {
        RatMatrix m = interpolation_matrix(s, d);
        auto ker = nullspace(m);
        KernelProbe probe = first_kernel_vector(m);
        CHECK(probe.rank == m.cols() - ker.size());
        if (!ker.empty()) CHECK(*probe.first == ker.front());
      }
    }
  }
}
