#include "wald/rational.hpp"

#include <ostream>

#include "wald/errors.hpp"

namespace wald {

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

bool Rational::is_canonical() const {
  mpq_class c(v_);
  c.canonicalize();
  return c.get_num() == v_.get_num() && c.get_den() == v_.get_den() && v_.get_den() > 0;
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Integer parse_integer(std::string_view s) {
  std::string t(s);
  std::size_t i = 0;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
  if (i == t.size()) throw ParseError("expected an integer, got '" + t + "'");
  for (std::size_t j = i; j < t.size(); ++j) {
    if (t[j] < '0' || t[j] > '9') throw ParseError("expected an integer, got '" + t + "'");
  }
  if (t[0] == '+') t.erase(0, 1);
  return Integer(t, 10);
}

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace wald

std::size_t std::hash<wald::Rational>::operator()(const wald::Rational& r) const noexcept {
  return std::hash<std::string>{}(r.str());
}
