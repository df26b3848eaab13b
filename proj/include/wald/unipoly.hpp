#pragma once

#include <vector>

#include "wald/rational.hpp"

namespace wald {

// Dense univariate polynomial over the rationals, lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational lead() const { return c_.empty() ? Rational() : c_.back(); }
  Rational operator()(const Rational& x) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly monic() const;
  UniPoly rem(const UniPoly& d) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

}  // namespace wald
