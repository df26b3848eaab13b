#include "wald/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace wald {

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational s;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
  return s;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = c_;
  Rational l = lead();
  for (auto& x : c) x /= l;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::rem(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = c_;
  const int dd = d.degree();
  Rational l = d.lead();
  for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
    if (r[k].is_zero()) continue;
    Rational f = r[k] / l;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= f * d.c_[j];
  }
  r.resize(std::min<std::size_t>(r.size(), static_cast<std::size_t>(dd)));
  return UniPoly(std::move(r));
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace wald
