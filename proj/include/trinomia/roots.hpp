#pragma once

#include <utility>
#include <vector>

#include "trinomia/rational.hpp"
#include "trinomia/upoly.hpp"

namespace trinomia {

struct LinearFactorization {
  BigRational content;                               // leading coefficient of f
  std::vector<std::pair<BigRational, int>> roots;    // (root, multiplicity), ascending
  UPoly residual;                                    // monic, no rational roots
};

/// f = content * prod (t - r)^m * residual; the product is checked exactly
/// before returning. f must be nonzero.
LinearFactorization rational_root_and_linear_factors(const UPoly& f);

/// Prime factorization of |n| (trial division, then Pollard rho); n != 0.
std::vector<std::pair<BigInt, int>> factor_integer(const BigInt& n);

/// All positive divisors of |n|; n != 0.
std::vector<BigInt> divisors(const BigInt& n);

}  // namespace trinomia
