#include "trinomia/diagonal.hpp"

#include <algorithm>
#include <stdexcept>

namespace trinomia {

namespace {

BigInt mod_positive(const BigInt& a, const BigInt& n) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

ExponentTriple canonical_triple(const ExponentTriple& v, const BigInt& n) {
  ExponentTriple out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = mod_positive(v[i] - v[0], n);
  return out;
}

std::array<BigInt, 3> apply(const PowerMatrix& p, const ExponentTriple& a) {
  std::array<BigInt, 3> out;
  for (int i = 0; i < 3; ++i) {
    BigInt s = 0;
    for (int j = 0; j < 3; ++j) s += p.at(i, j) * a[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

}  // namespace

IntMatrix difference_matrix(const PowerMatrix& p) {
  IntMatrix m(2, std::vector<BigInt>(3));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p.at(i, j) - p.at(i + 1, j);
  }
  return m;
}

bool verify_automorphism(const PowerMatrix& p, const ExponentTriple& a, const BigInt& n) {
  if (n < 1) throw std::invalid_argument("level must be positive");
  const auto pa = apply(p, a);
  return mod_positive(pa[0] - pa[1], n) == 0 && mod_positive(pa[1] - pa[2], n) == 0;
}

AbelianGroupInvariants diagonal_automorphism_group(const PowerMatrix& p) {
  if (determinant(p) == 0) throw std::invalid_argument("degenerate power matrix");
  const SnfResult snf = smith_normal_form(difference_matrix(p));
  AbelianGroupInvariants g;
  g.invariants = snf.factors;
  g.order = snf.factors[0] * snf.factors[1];
  g.level = snf.factors[1];
  for (std::size_t i = 0; i < 2; ++i) {
    const BigInt& ni = snf.factors[i];
    if (ni == 1) continue;
    ExponentTriple v;
    for (std::size_t r = 0; r < 3; ++r) v[r] = snf.right[r][i] * (g.level / ni);
    g.generators.push_back(canonical_triple(v, g.level));
  }
  if (g.generators.size() == 1) {
    // cyclic: pick the lexicographically smallest generator of the same subgroup
    const ExponentTriple base = g.generators.front();
    ExponentTriple best = base;
    BigInt gcd_check;
    for (BigInt k = 2; k < g.level; ++k) {
      mpz_gcd(gcd_check.get_mpz_t(), k.get_mpz_t(), g.level.get_mpz_t());
      if (gcd_check != 1) continue;
      ExponentTriple cand = canonical_triple({base[0] * k, base[1] * k, base[2] * k}, g.level);
      if (cand < best) best = cand;
    }
    g.generators.front() = best;
  }
  for (const auto& v : g.generators) {
    if (!verify_automorphism(p, v, g.level)) throw std::logic_error("generator fails the automorphism condition");
  }
  return g;
}

AbelianGroupInvariants diagonal_automorphism_group(const TrinomialCurve& c) {
  return diagonal_automorphism_group(c.power_matrix());
}

BigInt brute_force_group_order(const PowerMatrix& p, long bound) {
  const BigInt det = abs(determinant(p));
  if (det == 0) throw std::invalid_argument("degenerate power matrix");
  if (det > bound) throw std::invalid_argument("use SNF path");
  const long n = det.get_si();
  long count = 0;
  for (long v2 = 0; v2 < n; ++v2) {
    for (long v3 = 0; v3 < n; ++v3) {
      long s[3];
      for (int i = 0; i < 3; ++i) s[i] = (p.at(i, 1) * v2 + p.at(i, 2) * v3) % n;
      if (s[0] == s[1] && s[1] == s[2]) ++count;
    }
  }
  return count;
}

BigInt mod_d_kernel_order(const PowerMatrix& p) {
  const long d = p.degree();
  long count = 0;
  for (long a = 0; a < d; ++a) {
    for (long b = 0; b < d; ++b) {
      for (long c = 0; c < d; ++c) {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) ok = (p.at(i, 0) * a + p.at(i, 1) * b + p.at(i, 2) * c) % d == 0;
        if (ok) ++count;
      }
    }
  }
  return count / d;
}

}  // namespace trinomia
