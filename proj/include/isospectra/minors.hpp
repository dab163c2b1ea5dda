#pragma once

#include <cstdint>
#include <vector>

#include "isospectra/rational.hpp"

namespace isospectra {

// Dense n x n exact matrix, row-major.
struct RationalMatrix {
  int n = 0;
  std::vector<Rational> a;

  RationalMatrix() = default;
  explicit RationalMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, Rational(0)) {}

  Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  bool is_symmetric() const;
  bool has_zero_diagonal() const;
};

// Exact determinant by fraction-free (Bareiss) elimination; falls back to
// rational Gaussian elimination with partial pivoting when a pivot vanishes.
Rational determinant(const RationalMatrix& m);

// det(A_N) for the principal submatrix indexed by the set bits of `mask`
// (bit i-1 = row/column i). det(A_empty) = 1.
Rational principal_minor(const RationalMatrix& m, std::uint32_t mask);

// All 2^n principal minors indexed by subset bitmask.
struct MinorTable {
  int n = 0;
  std::vector<Rational> det_by_mask;  // size 2^n, entry 0 is det(A_empty) = 1

  const Rational& operator[](std::uint32_t mask) const { return det_by_mask[mask]; }
};

MinorTable all_principal_minors(const RationalMatrix& m, int cap = 12);

// Verdict of the equal-minors test: `symmetrized` is true when for every
// size k all k x k principal minors agree. Otherwise `k` is the smallest
// failing size and (mask_a, mask_b) a witness pair of subsets with
// differing minors.
struct SymmetrizedVerdict {
  bool symmetrized = true;
  int k = 0;
  std::uint32_t mask_a = 0;
  std::uint32_t mask_b = 0;
};

SymmetrizedVerdict has_symmetrized_principal_minors(const RationalMatrix& m, int cap = 12);

// det(A_N0) minus the average of all m x m principal minors.
Rational minor_average_defect(const RationalMatrix& m, int size, std::uint32_t mask);

// Trichotomy for symmetric zero-diagonal (weighted-graph) matrices.
// "Other" guarantees a nonzero isospectral diagonal shift exists.
enum class GraphClass { Edgeless, CompleteEqualUpToSign, Other };

GraphClass graph_rigidity_class(const RationalMatrix& m);

}  // namespace isospectra
