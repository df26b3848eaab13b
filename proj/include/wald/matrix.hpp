#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wald/rational.hpp"

namespace wald {

using RatVector = std::vector<Rational>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatMatrix transpose() const;
  RatVector apply(const RatVector& v) const;
  void append_row(const RatVector& row);

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Fraction-free elimination after clearing row denominators.
std::size_t rank_exact(const RatMatrix& m);

// Right kernel basis; one vector per non-pivot column in increasing column
// order, each primitive integral with first nonzero entry positive.
std::vector<RatVector> nullspace(const RatMatrix& m);

struct KernelProbe {
  std::size_t rank = 0;
  // Kernel vector for the first non-pivot column, primitive integral; equal
  // to the first vector returned by nullspace.
  std::optional<RatVector> first;
};

// One fraction-free forward elimination plus integral back substitution.
KernelProbe first_kernel_vector(const RatMatrix& m);

std::size_t rank_modular(const RatMatrix& m, std::uint64_t p);

// Exact rank. A modular rank equal to min(rows, cols) is accepted directly,
// since reduction mod p cannot raise the rank; otherwise falls back to
// rank_exact.
std::size_t rank_certified(const RatMatrix& m);

constexpr std::uint64_t kScreenPrime = 2305843009213693951ULL;  // 2^61 - 1

RatVector primitive_integer(const RatVector& v);

}  // namespace wald
