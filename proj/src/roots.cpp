#include "trinomia/roots.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace trinomia {

namespace {

BigInt pollard_rho(const BigInt& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt x = 2;
    BigInt y = 2;
    BigInt d = 1;
    auto step = [&](const BigInt& v) {
      BigInt r = (v * v + c) % n;
      return r;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      BigInt diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, int>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    ++out[n];
    return;
  }
  const BigInt d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<BigInt, int>> factor_integer(const BigInt& n_in) {
  if (n_in == 0) throw std::invalid_argument("cannot factor zero");
  BigInt n = abs(n_in);
  std::map<BigInt, int> found;
  for (unsigned long p = 2; p < 10000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++found[BigInt(p)];
      n /= p;
    }
  }
  factor_into(n, found);
  return {found.begin(), found.end()};
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> out{1};
  for (const auto& [p, k] : factor_integer(n)) {
    const std::size_t base = out.size();
    BigInt pk = 1;
    for (int e = 1; e <= k; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LinearFactorization rational_root_and_linear_factors(const UPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
  LinearFactorization out{f.lead(), {}, f.monic()};
  UPoly rest = out.residual;

  auto strip = [&](const BigRational& r) {
    const UPoly lin = UPoly::linear_root(r);
    int mult = 0;
    for (;;) {
      auto [q, rem] = rest.divmod(lin);
      if (!rem.is_zero()) break;
      rest = q;
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(r, mult);
  };

  strip(BigRational(0));
  if (rest.degree() >= 1) {
    // candidates p/q with p | a0 and q | an, taken from the squarefree part
    UPoly core(BigRational(1));
    for (const auto& s : squarefree_decomposition(rest)) core = core * s;
    const UPoly prim = core.primitive();
    const auto ps = divisors(prim.coeff(0).get_num());
    const auto qs = divisors(prim.lead().get_num());
    std::vector<BigRational> cands;
    for (const auto& p : ps) {
      for (const auto& q : qs) {
        cands.push_back(make_rational(p, q));
        cands.push_back(make_rational(-p, q));
      }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& r : cands) {
      if (rest.degree() < 1) break;
      if (prim.eval(r) == 0) strip(r);
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.residual = rest;

  UPoly check(out.content);
  for (const auto& [r, m] : out.roots) check = check * UPoly::linear_root(r).pow(static_cast<unsigned>(m));
  check = check * out.residual;
  if (!(check == f)) throw std::logic_error("linear factorization failed to reproduce input");
  return out;
}

}  // namespace trinomia
