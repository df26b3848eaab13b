#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wald/classifier.hpp"

namespace wald {

constexpr std::uint64_t kDefaultPrimes[3] = {1000003ULL, 1000033ULL, 1000037ULL};

struct AuditConfig {
  int m_max = 8;
  std::size_t aux_cap = kDefaultAuxCap;
  std::vector<std::uint64_t> primes = {kDefaultPrimes[0], kDefaultPrimes[1], kDefaultPrimes[2]};
  std::uint64_t seed = 0;
  // Multiplicities up to this bound get the modular rank comparison.
  int modular_m_max = 4;
  bool transform = true;
};

struct AuditReport {
  bool ok = true;
  std::vector<std::string> passed;
  std::vector<std::string> failed;

  void record(bool cond, const std::string& what);
};

// Integer matrix with determinant +-1, a product of random elementary
// operations and a coordinate permutation.
Mat3 random_unimodular(std::mt19937_64& rng, int steps = 6);

std::vector<ProjPoint> transform_all(const Mat3& t, const std::vector<ProjPoint>& pts);

// Re-validates a classification with routes that do not reuse its
// certificates: a fresh hint-free sweep, a fresh automatic LP, modular ranks
// and one random change of coordinates.
AuditReport audit(const std::vector<ProjPoint>& pts, const ClassificationResult& r, const AuditConfig& cfg = {});

}  // namespace wald
