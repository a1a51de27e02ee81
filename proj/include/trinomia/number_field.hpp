#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>

#include "trinomia/multipoly.hpp"
#include "trinomia/upoly.hpp"

namespace trinomia {

/// Q(theta) = Q[t] / (m), m monic irreducible (irreducibility is the
/// caller's responsibility; inverses fail loudly if it does not hold).
class NumberField {
 public:
  NumberField(UPoly minpoly, std::string generator_name);
  const UPoly& minpoly() const { return m_; }
  const std::string& generator_name() const { return name_; }
  int degree() const { return m_.degree(); }

 private:
  UPoly m_;
  std::string name_;
};

class FieldElement {
 public:
  FieldElement(std::shared_ptr<const NumberField> k, const UPoly& v);
  FieldElement(std::shared_ptr<const NumberField> k, const BigRational& c);

  static FieldElement generator(std::shared_ptr<const NumberField> k);

  const UPoly& value() const { return v_; }
  const std::shared_ptr<const NumberField>& field() const { return k_; }
  bool is_zero() const { return v_.is_zero(); }

  FieldElement inverse() const;  // throws std::domain_error on zero
  FieldElement pow(unsigned e) const;
  FieldElement operator-() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.v_ == b.v_; }

  std::string to_string() const;

 private:
  std::shared_ptr<const NumberField> k_;
  UPoly v_;
};

/// Sparse polynomial in three variables over a number field.
class FieldPoly {
 public:
  explicit FieldPoly(std::shared_ptr<const NumberField> k) : k_(std::move(k)) {}
  static FieldPoly from_rational(std::shared_ptr<const NumberField> k, const MultiPoly& f);
  /// sum_j coeffs[j] * var_j
  static FieldPoly linear(const std::array<FieldElement, 3>& coeffs);

  const std::map<Exponents, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Composition x_i -> images[i].
  FieldPoly substitute(const std::array<FieldPoly, 3>& images) const;
  FieldPoly pow(unsigned e) const;

  friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator*(const FieldElement& c, const FieldPoly& a);
  friend bool operator==(const FieldPoly& a, const FieldPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponents& e, const FieldElement& c);
  std::shared_ptr<const NumberField> k_;
  std::map<Exponents, FieldElement> terms_;
};

}  // namespace trinomia
