#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wald/matrix.hpp"
#include "wald/rational.hpp"

namespace wald {

using Exponent = std::array<int, 3>;

// Degree-d monomials in x0, x1, x2, graded lex with x0 > x1 > x2.
const std::vector<Exponent>& monomials(int d);
std::size_t monomial_count(int d);
std::size_t monomial_index(const Exponent& e);

class ProjPoint {
 public:
  ProjPoint(Integer x0, Integer x1, Integer x2);
  ProjPoint(long x0, long x1, long x2) : ProjPoint(Integer(x0), Integer(x1), Integer(x2)) {}
  static ProjPoint from_rational(const Rational& x0, const Rational& x1, const Rational& x2);

  const Integer& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Integer, 3>& coords() const { return c_; }
  // Index of the first nonzero coordinate.
  int chart() const;
  std::string str() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.c_ < b.c_; }

 private:
  std::array<Integer, 3> c_;
};

class PlaneCurve {
 public:
  // Coefficients are rescaled to a primitive integer vector whose first
  // nonzero entry is positive.
  PlaneCurve(int degree, RatVector coeffs);

  int degree() const { return degree_; }
  const RatVector& coeffs() const { return coeffs_; }
  const Rational& coeff(const Exponent& e) const { return coeffs_[monomial_index(e)]; }

  Integer evaluate(const ProjPoint& p) const;
  bool contains(const ProjPoint& p) const { return sgn(evaluate(p)) == 0; }
  bool proportional_to(const PlaneCurve& o) const { return *this == o; }
  std::string str() const;

  friend bool operator==(const PlaneCurve&, const PlaneCurve&) = default;
  friend bool operator<(const PlaneCurve& a, const PlaneCurve& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.coeffs_ < b.coeffs_;
  }

 private:
  int degree_;
  RatVector coeffs_;
};

PlaneCurve operator*(const PlaneCurve& f, const PlaneCurve& g);
PlaneCurve power(const PlaneCurve& f, int k);

// Row of scaled partial derivative values: entry for monomial x^e is
// C(e_u, a) C(e_v, b) p^(e - a e_u - b e_v), where (u, v) are the two
// coordinates other than p.chart().
std::vector<Integer> derivative_row(const ProjPoint& p, int d, int a, int b);

std::size_t mult_at(const PlaneCurve& c, const ProjPoint& p);

PlaneCurve line_through(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const PlaneCurve& l1, const PlaneCurve& l2);
bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);
PlaneCurve conic_through(const std::vector<ProjPoint>& pts);
bool is_irreducible_conic(const PlaneCurve& c);
PlaneCurve cubic_with_double_point(const std::vector<ProjPoint>& simple, const ProjPoint& dbl);

// Curves of degree d through the given points with the given multiplicities.
std::vector<PlaneCurve> curves_through(int d, const std::vector<ProjPoint>& pts,
                                       const std::vector<int>& mults);

struct PointGroup {
  std::vector<std::size_t> members;
  PlaneCurve witness;
};

struct IncidenceProfile {
  std::size_t max_collinear = 0;
  std::optional<PlaneCurve> max_line;
  std::vector<PointGroup> collinear_groups;
  std::vector<PointGroup> conic_subsets;
  bool conics_enumerated = true;
  std::map<std::pair<std::size_t, std::size_t>, PlaneCurve> pairwise_lines;
};

constexpr std::size_t kDefaultPointCap = 12;

void require_distinct(const std::vector<ProjPoint>& pts);
IncidenceProfile incidence_profile(const std::vector<ProjPoint>& pts,
                                   std::size_t conic_cap = kDefaultPointCap);

std::size_t concurrency_count_at(const ProjPoint& q, const std::vector<ProjPoint>& pts);
// Indices into ps of points on a side of the triangle with vertices qs.
std::vector<std::size_t> q_collinear_set(const std::vector<ProjPoint>& ps,
                                         const std::vector<ProjPoint>& qs);

using Mat3 = std::array<std::array<Rational, 3>, 3>;

Mat3 inverse(const Mat3& t);
Rational determinant(const Mat3& t);
ProjPoint transform(const Mat3& t, const ProjPoint& p);
// Image of the curve under p -> t p, i.e. f composed with t^{-1}.
PlaneCurve transform(const Mat3& t, const PlaneCurve& c);

// Certified smoothness: true only when the partials have been shown to have
// no common projective zero.
bool is_smooth_cubic(const PlaneCurve& c);

}  // namespace wald
