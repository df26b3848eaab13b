#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wald/geometry.hpp"
#include "wald/rational.hpp"

namespace wald {

enum class CurveStatus { verified, attested, unknown };

std::string to_string(CurveStatus s);

struct AuxCurve {
  PlaneCurve curve;
  CurveStatus status;
  std::string label;
  // Curves sharing a nonempty group name share one decomposition variable.
  std::string group;
  std::vector<std::size_t> mults;
};

class AuxCurveSet {
 public:
  explicit AuxCurveSet(std::vector<ProjPoint> points);

  const std::vector<ProjPoint>& points() const { return points_; }
  const std::vector<AuxCurve>& curves() const { return curves_; }
  std::size_t size() const { return curves_.size(); }

  // Lines are verified, conics verified iff irreducible, higher degrees
  // attested only on request. Multiplicities are always recomputed.
  const AuxCurve& add(const PlaneCurve& c, bool attest_irreducible = false, std::string label = {},
                      std::string group = {});
  const AuxCurve& add_line(std::size_t i, std::size_t j, std::string group = {});
  const AuxCurve& add_conic(const std::vector<std::size_t>& idx, std::string group = {});
  bool contains(const PlaneCurve& c) const;

 private:
  std::vector<ProjPoint> points_;
  std::vector<AuxCurve> curves_;
};

constexpr std::size_t kDefaultAuxCap = 40;

// Lines through at least two points and irreducible conics through five
// points in general position, richest first, truncated to cap.
AuxCurveSet auto_aux(const std::vector<ProjPoint>& points, std::size_t cap = kDefaultAuxCap,
                     bool with_conics = true);

struct Constraint {
  std::string label;
  RatVector coeffs;  // over the system variables
  Rational rhs;      // coeffs . x >= rhs
};

// Variables are (t, a_1, ..., a_r); t is free, the a_j are nonnegative.
struct BezoutSystem {
  std::vector<std::string> variables;
  std::vector<Constraint> constraints;

  std::size_t variable_index(const std::string& name) const;
};

struct BuildOptions {
  bool grouped = false;
};

BezoutSystem build_system(const AuxCurveSet& aux, BuildOptions opts = {});

struct LowerBoundCertificate {
  Rational bound;
  RatVector duals;
  BezoutSystem system;
  // Optimal (t, a) when produced by the solver.
  RatVector primal;
  // Indices of the input points the system was built on; empty means all.
  std::vector<std::size_t> support;
};

struct CertificateCheck {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

LowerBoundCertificate solve_min_ratio(const BezoutSystem& sys);
CertificateCheck verify_certificate(const LowerBoundCertificate& cert);

// Rescales raw multipliers so that the combined t coefficient is 1.
LowerBoundCertificate certificate_from_multipliers(const BezoutSystem& sys, const RatVector& mult);

bool complementary_slackness(const BezoutSystem& sys, const RatVector& duals, const RatVector& primal);

// One inequality in the form  cd*d >= cm*m + sum coef*var  with m = 1.
struct HandInequality {
  Rational cd;
  Rational cm;
  std::vector<std::pair<std::string, Rational>> terms;
};

BezoutSystem system_from_inequalities(const std::vector<std::string>& vars,
                                      const std::vector<HandInequality>& ineqs);

}  // namespace wald
