#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wald/bezout_lp.hpp"
#include "wald/fat_points.hpp"

namespace wald {

struct DivisorTerm {
  PlaneCurve curve;
  long coeff;
  std::string label;
};

struct FormalDivisor {
  std::vector<DivisorTerm> terms;
  int m = 1;

  int degree() const;
  // Expanded product of the components.
  PlaneCurve expand() const;
};

// Checks sum_j c_j mult(curve_j, P) >= m at every point and returns
// deg / m.
Rational verify_upper(const FormalDivisor& dv, const std::vector<ProjPoint>& pts);

struct SweepEntry {
  int m;
  int alpha;
  Rational ratio;
  Rational running_min;
};

struct UpperEvidence {
  enum class Kind { construction, sweep };
  Kind kind;
  Rational bound;
  std::optional<FormalDivisor> divisor;
  std::optional<SweepEntry> entry;
};

struct WaldschmidtResult {
  Rational lower;
  std::optional<LowerBoundCertificate> lower_cert;
  Rational upper;
  std::optional<UpperEvidence> upper_evidence;
  std::optional<Rational> exact;
  std::vector<SweepEntry> sweep;
};

struct EngineConfig {
  int m_max = 8;
  unsigned threads = 1;
};

class Engine {
 public:
  explicit Engine(EngineConfig cfg = {}) : cfg_(cfg) {}

  const EngineConfig& config() const { return cfg_; }
  AlphaResult alpha(const std::vector<ProjPoint>& pts, int m,
                    std::optional<Rational> lower_hint = std::nullopt);
  std::vector<SweepEntry> sweep(const std::vector<ProjPoint>& pts, int m_max,
                                std::optional<Rational> lower_hint = std::nullopt);
  std::size_t memo_size() const;

 private:
  EngineConfig cfg_;
  mutable std::mutex mu_;
  std::map<std::pair<std::string, int>, AlphaResult> memo_;
};

std::string scheme_key(const std::vector<ProjPoint>& pts);

// Combines verified bounds; throws InconsistentBoundsError when the best lower
// bound exceeds the best upper bound.
WaldschmidtResult conclude(const std::vector<LowerBoundCertificate>& lowers,
                           const std::vector<UpperEvidence>& uppers,
                           const std::vector<SweepEntry>& trace);

}  // namespace wald
