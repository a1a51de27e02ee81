#pragma once

#include <vector>

#include "trinomia/multipoly.hpp"
#include "trinomia/upoly.hpp"

namespace trinomia {

/// Sylvester-matrix resultant of f and g with respect to variable `var`,
/// evaluated by fraction-free (Bareiss) elimination over the coefficient
/// ring. The result has the same arity and does not involve `var`.
///
/// If only one input involves `var` the usual convention applies:
/// Res(f, c) = c^deg(f). Throws std::invalid_argument("nothing to eliminate")
/// when neither does, and std::invalid_argument when either input is zero.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

/// Same Sylvester determinant, computed by evaluating `keep` at integer
/// nodes and interpolating. f and g may involve only `var` and `keep`.
UPoly resultant_by_interpolation(const MultiPoly& f, const MultiPoly& g, int var, int keep);

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lead(f), n = deg_var f >= 1.
MultiPoly discriminant(const MultiPoly& f, int var);
UPoly discriminant(const UPoly& f);

/// Univariate resultant over the rationals.
BigRational resultant(const UPoly& f, const UPoly& g);

/// Determinant of a square rational matrix (Gaussian elimination).
BigRational determinant(std::vector<std::vector<BigRational>> m);

}  // namespace trinomia
