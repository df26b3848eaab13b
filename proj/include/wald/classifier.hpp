#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wald/bezout_lp.hpp"
#include "wald/engine.hpp"

namespace wald {

struct Citation {
  std::string loc;
  std::string quote;
};

struct ClassificationResult {
  std::string family;
  Rational lower;
  Rational upper;
  std::optional<Rational> exact;
  std::vector<Citation> citations;
  std::optional<LowerBoundCertificate> lower_cert;
  std::optional<UpperEvidence> upper_evidence;
  std::vector<SweepEntry> sweep;
  std::vector<std::string> notes;
};

struct ClassifyConfig {
  int m_max = 8;
  std::size_t aux_cap = kDefaultAuxCap;
  std::size_t point_cap = kDefaultPointCap;
  // Run the multiplicity sweep for families that end in an interval.
  bool sweep_intervals = true;
};

ClassificationResult classify(const std::vector<ProjPoint>& pts, const ClassifyConfig& cfg = {},
                              Engine* engine = nullptr);

// Bezout LP over the automatically generated aux set of pts restricted to
// support (all points when empty).
LowerBoundCertificate auto_lower_bound(const std::vector<ProjPoint>& pts,
                                       const std::vector<std::size_t>& support, std::size_t cap,
                                       bool lines_only = false);

}  // namespace wald
