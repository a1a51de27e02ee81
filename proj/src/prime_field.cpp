#include "trinomia/prime_field.hpp"

#include <stdexcept>

namespace trinomia {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t k = n + 1;
  while (!is_prime(k)) ++k;
  return k;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t reduce_mod(const BigRational& q, std::uint64_t p) {
  const BigInt pz(static_cast<unsigned long>(p));
  BigInt den = q.get_den() % pz;
  if (den == 0) throw std::domain_error("bad reduction: prime divides a denominator");
  BigInt num = q.get_num() % pz;
  if (num < 0) num += pz;
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  const BigInt r = (num * inv) % pz;
  return r.get_ui();
}

PrimeFieldPoly::PrimeFieldPoly(int arity, std::uint64_t p) : arity_(arity), p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
}

PrimeFieldPoly PrimeFieldPoly::reduce(const MultiPoly& f, std::uint64_t p) {
  PrimeFieldPoly out(f.arity(), p);
  for (const auto& [e, c] : f.terms()) out.add_term(e, reduce_mod(c, p));
  return out;
}

void PrimeFieldPoly::add_term(const Exponents& e, std::uint64_t c) {
  c %= p_;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = (it->second + c) % p_;
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint64_t PrimeFieldPoly::evaluate(std::span<const std::uint64_t> point) const {
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term = mul_mod(term, pow_mod(point[i], static_cast<std::uint64_t>(e[i]), p_), p_);
    }
    acc = (acc + term) % p_;
  }
  return acc;
}

PrimeFieldPoly PrimeFieldPoly::partial_derivative(int var) const {
  PrimeFieldPoly out(arity_, p_);
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents d = e;
    d[v] -= 1;
    out.add_term(d, mul_mod(c, static_cast<std::uint64_t>(e[v]) % p_, p_));
  }
  return out;
}

PrimeFieldPoly operator*(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  if (a.p_ != b.p_ || a.arity_ != b.arity_) throw std::invalid_argument("incompatible prime field polynomials");
  PrimeFieldPoly out(a.arity_, a.p_);
  Exponents e(static_cast<std::size_t>(a.arity_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, mul_mod(ca, cb, a.p_));
    }
  }
  return out;
}

}  // namespace trinomia
