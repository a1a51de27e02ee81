#pragma once

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "trinomia/rational.hpp"
#include "trinomia/upoly.hpp"

namespace trinomia {

using Exponents = std::vector<int>;

/// Sparse polynomial over the rationals in a fixed number of variables.
/// Terms live in a map keyed by exponent vector; zero coefficients are never
/// stored, so the zero polynomial is the empty map.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, BigRational>;

  explicit MultiPoly(int arity = 3);
  MultiPoly(int arity, const BigRational& constant);

  /// coeff * prod_i x_i^exps[i]
  static MultiPoly monomial(const Exponents& exps, const BigRational& coeff = 1);
  /// The polynomial x_index.
  static MultiPoly variable(int arity, int index);
  /// Lifts a univariate polynomial into variable `index`.
  static MultiPoly from_univariate(const UPoly& p, int arity, int index);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRational constant_term() const;
  BigRational coefficient(const Exponents& exps) const;

  int total_degree() const;  // -1 for zero
  int degree_in(int var) const;  // -1 for zero
  bool is_homogeneous() const;

  /// Coefficients w.r.t. `var`: result[k] is the coefficient of var^k, itself
  /// a polynomial of the same arity not involving `var`.
  std::vector<MultiPoly> coefficients_in(int var) const;
  /// Leading coefficient w.r.t. `var`.
  MultiPoly lead_in(int var) const;

  MultiPoly partial_derivative(int var) const;
  BigRational evaluate(std::span<const BigRational> point) const;
  /// Replaces variable `var` by a constant; arity is unchanged.
  MultiPoly specialize(int var, const BigRational& value) const;
  /// Composition: x_i -> images[i]; all images share one arity.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  /// Univariate view; every variable other than `var` must be absent.
  UPoly to_univariate(int var) const;
  /// Greatest monomial dividing every term (exponent-wise minimum).
  Exponents monomial_content() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const BigRational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigRational& c) { return a *= c; }
  friend MultiPoly operator*(const BigRational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned e) const;
  /// Exact division (lex order); throws std::domain_error on a remainder.
  MultiPoly divide_exact(const MultiPoly& divisor) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(const Exponents& e, const BigRational& c);
  int arity_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Default variable names: x, y, z, t for arity <= 4, else x0, x1, ...
std::vector<std::string> default_names(int arity);

}  // namespace trinomia
