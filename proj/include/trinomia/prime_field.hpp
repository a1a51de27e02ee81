#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "trinomia/multipoly.hpp"

namespace trinomia {

bool is_prime(std::uint64_t n);
/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// Residue of q modulo p; throws "bad reduction" if p divides the denominator.
std::uint64_t reduce_mod(const BigRational& q, std::uint64_t p);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

/// Polynomial with coefficients in F_p, same term-map layout as MultiPoly.
class PrimeFieldPoly {
 public:
  PrimeFieldPoly(int arity, std::uint64_t p);
  static PrimeFieldPoly reduce(const MultiPoly& f, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  int arity() const { return arity_; }
  const std::map<Exponents, std::uint64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::uint64_t evaluate(std::span<const std::uint64_t> point) const;
  PrimeFieldPoly partial_derivative(int var) const;

  friend PrimeFieldPoly operator*(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend bool operator==(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    return a.p_ == b.p_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Exponents& e, std::uint64_t c);
  int arity_;
  std::uint64_t p_;
  std::map<Exponents, std::uint64_t> terms_;
};

}  // namespace trinomia
