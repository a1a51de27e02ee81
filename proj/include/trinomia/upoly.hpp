#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "trinomia/rational.hpp"

namespace trinomia {

/// Dense univariate polynomial over the rationals, coefficients low to high.
/// The zero polynomial has no coefficients; a nonzero one never ends in 0.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<BigRational> coeffs);
  UPoly(const BigRational& constant);  // NOLINT(google-explicit-constructor)
  UPoly(long constant) : UPoly(BigRational(constant)) {}  // NOLINT

  /// c * t^k
  static UPoly monomial(const BigRational& c, int k);
  /// t - r
  static UPoly linear_root(const BigRational& r);
  /// Interpolates through (xs[i], ys[i]); xs pairwise distinct.
  static UPoly interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<BigRational>& coeffs() const { return c_; }
  BigRational coeff(int k) const;
  BigRational lead() const;

  BigRational eval(const BigRational& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  UPoly primitive() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; divisor nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  /// Division that must leave no remainder (throws otherwise).
  UPoly divide_exact(const UPoly& divisor) const;
  UPoly pow(unsigned e) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

/// Monic gcd (zero iff both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// Yun decomposition: f = lead * prod_k factors[k-1]^k with each factor
/// monic, squarefree and pairwise coprime. Empty for constants.
std::vector<UPoly> squarefree_decomposition(const UPoly& f);

/// Number of distinct complex roots.
int distinct_root_count(const UPoly& f);

std::ostream& operator<<(std::ostream& os, const UPoly& p);

}  // namespace trinomia
