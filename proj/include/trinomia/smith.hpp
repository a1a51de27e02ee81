#pragma once

#include <vector>

#include "trinomia/rational.hpp"

namespace trinomia {

using IntMatrix = std::vector<std::vector<BigInt>>;

struct SnfResult {
  /// min(rows, cols) diagonal entries, non-negative, each dividing the next
  /// nonzero one; zeros (if any) come last.
  std::vector<BigInt> factors;
  IntMatrix left;   // rows x rows, unimodular
  IntMatrix right;  // cols x cols, unimodular
};

/// Smith normal form by elementary row and column operations with explicit
/// transform tracking: left * m * right = diag(factors).
SnfResult smith_normal_form(const IntMatrix& m);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(std::size_t n);
/// Exact determinant of a square integer matrix.
BigInt int_determinant(const IntMatrix& m);

}  // namespace trinomia
