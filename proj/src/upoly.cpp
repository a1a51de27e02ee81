#include "trinomia/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace trinomia {

UPoly::UPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const BigRational& constant) {
  if (constant != 0) c_.push_back(constant);
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monomial(const BigRational& c, int k) {
  if (c == 0) return {};
  std::vector<BigRational> v(static_cast<std::size_t>(k) + 1, BigRational(0));
  v.back() = c;
  return UPoly(std::move(v));
}

UPoly UPoly::linear_root(const BigRational& r) { return UPoly({-r, BigRational(1)}); }

UPoly UPoly::interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<BigRational> dd(ys);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const BigRational den = xs[i] - xs[i - level];
      if (den == 0) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  }
  UPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * UPoly({-xs[i], BigRational(1)}) + UPoly(dd[i]);
  }
  return result;
}

BigRational UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

BigRational UPoly::lead() const { return c_.empty() ? BigRational(0) : c_.back(); }

BigRational UPoly::eval(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigRational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return {};
  const BigRational l = lead();
  std::vector<BigRational> v(c_);
  for (auto& x : v) x /= l;
  return UPoly(std::move(v));
}

UPoly UPoly::primitive() const {
  if (c_.empty()) return {};
  BigInt den_lcm = 1;
  for (const auto& x : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> ints;
  ints.reserve(c_.size());
  BigInt g = 0;
  for (const auto& x : c_) {
    BigInt v = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) g = -g;
  std::vector<BigRational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(v / g);
  return UPoly(std::move(out));
}

UPoly UPoly::operator-() const {
  std::vector<BigRational> v(c_);
  for (auto& x : v) x = -x;
  return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<BigRational> v(std::max(a.c_.size(), b.c_.size()), BigRational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> v(a.c_.size() + b.c_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < divisor.degree()) return {UPoly(), *this};
  std::vector<BigRational> rem(c_);
  std::vector<BigRational> quo(c_.size() - divisor.c_.size() + 1, BigRational(0));
  const BigRational l = divisor.lead();
  const std::size_t dn = divisor.c_.size();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const BigRational q = rem[k + dn - 1] / l;
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * divisor.c_[j];
  }
  rem.resize(dn - 1);
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::divide_exact(const UPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result(BigRational(1));
  UPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const BigRational& x = c_[k];
    if (x == 0) continue;
    BigRational mag = abs(x);
    if (first) {
      if (x < 0) os << "-";
    } else {
      os << (x < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (k == 0 || !unit) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.primitive();
  UPoly y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& f) {
  std::vector<UPoly> out;
  if (f.degree() < 1) return out;
  const UPoly fm = f.monic();
  const UPoly fp = fm.derivative();
  UPoly a = gcd(fm, fp);
  UPoly b = fm.divide_exact(a);
  UPoly c = fp.divide_exact(a);
  UPoly d = c - b.derivative();
  while (b.degree() >= 1) {
    UPoly g = gcd(b, d);
    out.push_back(g);
    b = b.divide_exact(g);
    c = d.divide_exact(g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

int distinct_root_count(const UPoly& f) {
  int n = 0;
  for (const auto& s : squarefree_decomposition(f)) n += s.degree();
  return n;
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.to_string(); }

}  // namespace trinomia
