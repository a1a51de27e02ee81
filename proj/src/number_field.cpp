#include "trinomia/number_field.hpp"

#include <stdexcept>

namespace trinomia {

NumberField::NumberField(UPoly minpoly, std::string generator_name)
    : m_(std::move(minpoly)), name_(std::move(generator_name)) {
  if (m_.degree() < 1) throw std::invalid_argument("minimal polynomial must have positive degree");
  if (m_.lead() != 1) throw std::invalid_argument("minimal polynomial must be monic");
}

FieldElement::FieldElement(std::shared_ptr<const NumberField> k, const UPoly& v) : k_(std::move(k)) {
  v_ = v.divmod(k_->minpoly()).second;
}

FieldElement::FieldElement(std::shared_ptr<const NumberField> k, const BigRational& c)
    : FieldElement(std::move(k), UPoly(c)) {}

FieldElement FieldElement::generator(std::shared_ptr<const NumberField> k) {
  return FieldElement(std::move(k), UPoly::monomial(1, 1));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in a number field");
  // extended Euclid: s * v + t * m = g
  UPoly r0 = k_->minpoly();
  UPoly r1 = v_;
  UPoly s0(0);
  UPoly s1(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    UPoly s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0.degree() != 0) throw std::domain_error("modulus is reducible: element is a zero divisor");
  return FieldElement(k_, s0 * UPoly(BigRational(1) / r0.coeff(0)));
}

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement result(k_, BigRational(1));
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

FieldElement FieldElement::operator-() const { return FieldElement(k_, -v_); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) { return FieldElement(a.k_, a.v_ + b.v_); }
FieldElement operator-(const FieldElement& a, const FieldElement& b) { return FieldElement(a.k_, a.v_ - b.v_); }
FieldElement operator*(const FieldElement& a, const FieldElement& b) { return FieldElement(a.k_, a.v_ * b.v_); }

std::string FieldElement::to_string() const { return v_.to_string(k_->generator_name()); }

void FieldPoly::add_term(const Exponents& e, const FieldElement& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

FieldPoly FieldPoly::from_rational(std::shared_ptr<const NumberField> k, const MultiPoly& f) {
  if (f.arity() != 3) throw std::invalid_argument("expected a ternary form");
  FieldPoly out(k);
  for (const auto& [e, c] : f.terms()) out.add_term(e, FieldElement(k, c));
  return out;
}

FieldPoly FieldPoly::linear(const std::array<FieldElement, 3>& coeffs) {
  FieldPoly out(coeffs[0].field());
  for (int j = 0; j < 3; ++j) {
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(j)] = 1;
    out.add_term(e, coeffs[static_cast<std::size_t>(j)]);
  }
  return out;
}

FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
  FieldPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) {
  FieldPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  FieldPoly out(a.k_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

FieldPoly operator*(const FieldElement& c, const FieldPoly& a) {
  FieldPoly out(a.k_);
  for (const auto& [e, v] : a.terms_) out.add_term(e, c * v);
  return out;
}

FieldPoly FieldPoly::pow(unsigned e) const {
  FieldPoly result(k_);
  result.add_term({0, 0, 0}, FieldElement(k_, BigRational(1)));
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

FieldPoly FieldPoly::substitute(const std::array<FieldPoly, 3>& images) const {
  FieldPoly out(k_);
  for (const auto& [e, c] : terms_) {
    FieldPoly term(k_);
    term.add_term({0, 0, 0}, c);
    for (std::size_t i = 0; i < 3; ++i) term = term * images[i].pow(static_cast<unsigned>(e[i]));
    out = out + term;
  }
  return out;
}

}  // namespace trinomia
