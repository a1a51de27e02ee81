#pragma once

#include <array>
#include <vector>

#include "trinomia/curve.hpp"
#include "trinomia/smith.hpp"

namespace trinomia {

using ExponentTriple = std::array<BigInt, 3>;

/// Diagonal automorphisms (x:y:z) -> (z^a1 x : z^a2 y : z^a3 z), z = exp(2 pi i / level).
struct AbelianGroupInvariants {
  std::vector<BigInt> invariants;  // n1 | n2, ones kept
  BigInt order;
  BigInt level;  // n2
  /// Numerators at `level`, one per nontrivial invariant factor, shifted
  /// along the diagonal so the first entry is 0 and reduced into [0, level).
  std::vector<ExponentTriple> generators;
};

/// Rows row1(P) - row2(P) and row2(P) - row3(P).
IntMatrix difference_matrix(const PowerMatrix& p);

/// Solutions of M v = 0 in (Q/Z)^3 modulo the diagonal, read off the Smith
/// form of the difference matrix M. Throws std::invalid_argument("degenerate
/// power matrix") when det P = 0.
AbelianGroupInvariants diagonal_automorphism_group(const PowerMatrix& p);
AbelianGroupInvariants diagonal_automorphism_group(const TrinomialCurve& c);

/// (P a)_1 = (P a)_2 = (P a)_3 mod n, i.e. all monomials pick up one factor.
bool verify_automorphism(const PowerMatrix& p, const ExponentTriple& a, const BigInt& n);

/// Counts v in (Z/N)^3, N = |det P|, with P v constant mod N, divided by N.
/// Every diagonal shift changes v_1 bijectively, so only v_1 = 0 is scanned.
/// Throws std::invalid_argument("use SNF path") when N > bound.
BigInt brute_force_group_order(const PowerMatrix& p, long bound = 10000);

/// The literal reading "P v = 0 over Z/dZ", counted modulo the diagonal;
/// kept to document that it does not give det P / d.
BigInt mod_d_kernel_order(const PowerMatrix& p);

}  // namespace trinomia
