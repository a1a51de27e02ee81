#pragma once

#include <array>

#include "trinomia/curve.hpp"
#include "trinomia/smith.hpp"

namespace trinomia {

/// Data that rescales x, y, z so all three coefficients become Delta-th roots
/// of unity: with lambda_k any root of lambda_k^Delta = B_k, substituting
/// x_k -> lambda_k x_k multiplies term i by prod_k lambda_k^p_ik.
struct NormalizationWitness {
  BigInt delta;
  IntMatrix q;  // adjugate, q * P = P * q = delta * I
  std::array<BigRational, 3> b;  // b_k = prod_i A_i^(-q_ki)
};

/// Classical adjugate (transpose of the cofactor matrix).
IntMatrix adjugate(const PowerMatrix& p);

/// Throws std::invalid_argument("degenerate power matrix") when det P = 0 and
/// std::invalid_argument on a zero coefficient. Both identities are checked
/// before returning (std::logic_error if either fails).
NormalizationWitness normalize(const PowerMatrix& p, const std::array<BigRational, 3>& a);

/// Q P = P Q = Delta I and prod_j B_j^p_ij = A_i^(-Delta) for every i.
bool verify_witness(const NormalizationWitness& w, const PowerMatrix& p, const std::array<BigRational, 3>& a);

/// Takes principal complex roots lambda_k = B_k^(1/Delta) and returns
/// max_i |A_i prod_k lambda_k^p_ik - rho_i|, rho_i the nearest Delta-th root
/// of unity. Works in log space so huge B_k do not overflow.
double numeric_scaling_check(const NormalizationWitness& w, const PowerMatrix& p, const std::array<BigRational, 3>& a);

}  // namespace trinomia
