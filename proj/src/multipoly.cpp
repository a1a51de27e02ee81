#include "trinomia/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trinomia {

std::vector<std::string> default_names(int arity) {
  static const char* kShort[] = {"x", "y", "z", "t"};
  std::vector<std::string> names;
  for (int i = 0; i < arity; ++i) {
    names.emplace_back(arity <= 4 ? std::string(kShort[i]) : "x" + std::to_string(i));
  }
  return names;
}

MultiPoly::MultiPoly(int arity) : arity_(arity) {
  if (arity < 1) throw std::invalid_argument("MultiPoly arity must be positive");
}

MultiPoly::MultiPoly(int arity, const BigRational& constant) : MultiPoly(arity) {
  if (constant != 0) terms_.emplace(Exponents(static_cast<std::size_t>(arity), 0), constant);
}

MultiPoly MultiPoly::monomial(const Exponents& exps, const BigRational& coeff) {
  MultiPoly p(static_cast<int>(exps.size()));
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
  if (coeff != 0) p.terms_.emplace(exps, coeff);
  return p;
}

MultiPoly MultiPoly::variable(int arity, int index) {
  Exponents e(static_cast<std::size_t>(arity), 0);
  e.at(static_cast<std::size_t>(index)) = 1;
  return monomial(e);
}

MultiPoly MultiPoly::from_univariate(const UPoly& p, int arity, int index) {
  MultiPoly out(arity);
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k) == 0) continue;
    Exponents e(static_cast<std::size_t>(arity), 0);
    e.at(static_cast<std::size_t>(index)) = k;
    out.terms_.emplace(std::move(e), p.coeff(k));
  }
  return out;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

BigRational MultiPoly::constant_term() const {
  return coefficient(Exponents(static_cast<std::size_t>(arity_), 0));
}

BigRational MultiPoly::coefficient(const Exponents& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? BigRational(0) : it->second;
}

int MultiPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    deg = std::max(deg, s);
  }
  return deg;
}

int MultiPoly::degree_in(int var) const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e.at(static_cast<std::size_t>(var)));
  return deg;
}

bool MultiPoly::is_homogeneous() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    if (deg >= 0 && s != deg) return false;
    deg = s;
  }
  return true;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(degree_in(var) + 1, 0)), MultiPoly(arity_));
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    const int k = rest[static_cast<std::size_t>(var)];
    rest[static_cast<std::size_t>(var)] = 0;
    out[static_cast<std::size_t>(k)].terms_.emplace(std::move(rest), c);
  }
  return out;
}

MultiPoly MultiPoly::lead_in(int var) const {
  if (is_zero()) return MultiPoly(arity_);
  return coefficients_in(var).back();
}

MultiPoly MultiPoly::partial_derivative(int var) const {
  if (var < 0 || var >= arity_) throw std::out_of_range("partial_derivative: variable index");
  MultiPoly out(arity_);
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents d = e;
    d[v] -= 1;
    out.add_term(d, c * e[v]);
  }
  return out;
}

BigRational MultiPoly::evaluate(std::span<const BigRational> point) const {
  if (static_cast<int>(point.size()) != arity_) throw std::invalid_argument("evaluate: arity mismatch");
  BigRational acc = 0;
  for (const auto& [e, c] : terms_) {
    BigRational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= rational_pow(point[i], e[i]);
    }
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::specialize(int var, const BigRational& value) const {
  MultiPoly out(arity_);
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    Exponents r = e;
    r[v] = 0;
    out.add_term(r, c * rational_pow(value, e[v]));
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != arity_) throw std::invalid_argument("substitute: need one image per variable");
  const int out_arity = images.front().arity();
  // cache powers per variable
  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].arity() != out_arity) throw std::invalid_argument("substitute: image arity mismatch");
    powers[i].push_back(MultiPoly(out_arity, 1));
  }
  MultiPoly out(out_arity);
  for (const auto& [e, c] : terms_) {
    MultiPoly term(out_arity, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
      if (e[i] != 0) term = term * powers[i][static_cast<std::size_t>(e[i])];
    }
    out += term;
  }
  return out;
}

UPoly MultiPoly::to_univariate(int var) const {
  std::vector<BigRational> v(static_cast<std::size_t>(std::max(degree_in(var) + 1, 0)), BigRational(0));
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (static_cast<int>(i) != var && e[i] != 0) throw std::invalid_argument("to_univariate: other variables present");
    }
    v[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] = c;
  }
  return UPoly(std::move(v));
}

Exponents MultiPoly::monomial_content() const {
  if (terms_.empty()) return Exponents(static_cast<std::size_t>(arity_), 0);
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

void MultiPoly::add_term(const Exponents& e, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.arity_ != arity_) throw std::invalid_argument("arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("arity mismatch");
  MultiPoly out(a.arity_);
  Exponents e(static_cast<std::size_t>(a.arity_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(arity_, 1);
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("multivariate division by zero");
  if (divisor.arity_ != arity_) throw std::invalid_argument("arity mismatch");
  MultiPoly rem(*this);
  MultiPoly quo(arity_);
  const auto& [dlead_e, dlead_c] = *divisor.terms_.rbegin();
  Exponents shift(static_cast<std::size_t>(arity_));
  while (!rem.is_zero()) {
    const auto& [rl_e, rl_c] = *rem.terms_.rbegin();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      shift[i] = rl_e[i] - dlead_e[i];
      if (shift[i] < 0) throw std::domain_error("inexact multivariate division");
    }
    const BigRational q = rl_c / dlead_c;
    quo.add_term(shift, q);
    Exponents e(shift.size());
    for (const auto& [de, dc] : divisor.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = de[i] + shift[i];
      rem.add_term(e, -q * dc);
    }
  }
  return quo;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names_in) const {
  if (terms_.empty()) return "0";
  const auto names = names_in.empty() ? default_names(arity_) : names_in;
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const BigRational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      mono << names[i];
      if (e[i] > 1) mono << "^" << e[i];
      any = true;
    }
    if (!any) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono.str();
    } else {
      os << mag.get_str() << "*" << mono.str();
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace trinomia
