#include "trinomia/low_degree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace trinomia {

namespace {

using Bracket = std::array<int, 3>;
// symbol-exponent triples encoded as 16*i + 4*j + k; key is the sorted list
using UmbralKey = std::vector<int>;
using Expansion = std::map<UmbralKey, long>;

Expansion expand_brackets(int symbols, const std::vector<Bracket>& brackets) {
  const auto& perms = s3_elements();
  Expansion out;
  std::vector<std::array<int, 3>> exps(static_cast<std::size_t>(symbols), {0, 0, 0});
  auto recurse = [&](auto&& self, std::size_t b, int sign) -> void {
    if (b == brackets.size()) {
      UmbralKey key;
      for (const auto& e : exps) key.push_back(16 * e[0] + 4 * e[1] + e[2]);
      std::sort(key.begin(), key.end());
      out[key] += sign;
      return;
    }
    for (const auto& p : perms) {
      // sign of p: number of inversions
      int inv = 0;
      for (int i = 0; i < 3; ++i) {
        for (int k = i + 1; k < 3; ++k) inv += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(k)] ? 1 : 0;
      }
      for (int k = 0; k < 3; ++k) ++exps[static_cast<std::size_t>(brackets[b][static_cast<std::size_t>(k)])][static_cast<std::size_t>(p[static_cast<std::size_t>(k)])];
      self(self, b + 1, (inv % 2 == 0) ? sign : -sign);
      for (int k = 0; k < 3; ++k) --exps[static_cast<std::size_t>(brackets[b][static_cast<std::size_t>(k)])][static_cast<std::size_t>(p[static_cast<std::size_t>(k)])];
    }
  };
  recurse(recurse, 0, 1);
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

const Expansion& s_expansion() {
  static const Expansion e = expand_brackets(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  return e;
}

const Expansion& t_expansion() {
  static const Expansion e = expand_brackets(6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}, {3, 4, 5}});
  return e;
}

BigRational evaluate(const Expansion& ex, const std::array<BigRational, 64>& umbral) {
  BigRational total = 0;
  for (const auto& [key, coeff] : ex) {
    BigRational term = coeff;
    for (int idx : key) term *= umbral[static_cast<std::size_t>(idx)];
    total += term;
  }
  return total;
}

std::array<BigRational, 64> umbral_coefficients(const MultiPoly& f) {
  if (f.arity() != 3 || !f.is_homogeneous() || f.total_degree() != 3) {
    throw std::invalid_argument("expected a ternary cubic form");
  }
  static const long fact[4] = {1, 1, 2, 6};
  std::array<BigRational, 64> u{};
  for (const auto& [e, c] : f.terms()) {
    u[static_cast<std::size_t>(16 * e[0] + 4 * e[1] + e[2])] = c * fact[e[0]] * fact[e[1]] * fact[e[2]] / 6;
  }
  return u;
}

struct RawInvariants {
  BigRational s;
  BigRational t;
};

RawInvariants raw_invariants(const MultiPoly& f) {
  const auto u = umbral_coefficients(f);
  return {evaluate(s_expansion(), u), evaluate(t_expansion(), u)};
}

MultiPoly weierstrass(long a, long b) {
  const MultiPoly x = MultiPoly::variable(3, 0);
  const MultiPoly y = MultiPoly::variable(3, 1);
  const MultiPoly z = MultiPoly::variable(3, 2);
  return y * y * z - x.pow(3) - BigRational(a) * x * z * z - BigRational(b) * z.pow(3);
}

const RawInvariants& calibration() {
  static const RawInvariants c{raw_invariants(weierstrass(1, 0)).s, raw_invariants(weierstrass(0, 1)).t};
  return c;
}

}  // namespace

TernaryCubicInvariants cubic_invariants(const MultiPoly& f) {
  const RawInvariants raw = raw_invariants(f);
  const RawInvariants& cal = calibration();
  TernaryCubicInvariants out;
  out.s = raw.s;
  out.t = raw.t;
  const BigRational a = raw.s / cal.s;
  const BigRational b = raw.t / cal.t;
  out.discriminant = 4 * a * a * a + 27 * b * b;
  if (out.discriminant != 0) out.j = 1728 * 4 * a * a * a / out.discriminant;
  return out;
}

std::optional<BigRational> j_invariant_cubic(const MultiPoly& f) { return cubic_invariants(f).j; }

std::optional<BigRational> j_invariant_cubic(const TrinomialCurve& c) {
  if (c.degree() != 3) throw std::invalid_argument("j-invariant needs a cubic");
  return j_invariant_cubic(c.polynomial());
}

std::vector<CubicClass> birational_census_cubics() {
  std::map<BigRational, std::vector<CurveType>> groups;
  for (CurveType t : kAllCurveTypes) {
    const auto j = j_invariant_cubic(canonical_curve(t, 3));
    if (!j) throw std::logic_error("canonical cubic is singular");
    groups[*j].push_back(t);
  }
  std::vector<CubicClass> out;
  for (auto& [j, members] : groups) out.push_back({j, members});
  return out;
}

std::shared_ptr<const NumberField> quartic_field() {
  static const auto k = std::make_shared<const NumberField>(
      UPoly(std::vector<BigRational>{1, 0, 28, 0, 2, 0, 4, 0, 1}), "theta");
  return k;
}

QuarticConstants quartic_constants() {
  const auto k = quartic_field();
  const FieldElement th = FieldElement::generator(k);
  const FieldElement one(k, BigRational(1));
  // (theta - i)^4 = 2 rearranges to theta^4 - 6 theta^2 - 1 = i (4 theta^3 - 4 theta)
  const FieldElement i = (th.pow(4) - FieldElement(k, BigRational(6)) * th.pow(2) - one) /
                         (FieldElement(k, BigRational(4)) * (th.pow(3) - th));
  const FieldElement r4 = th - i;
  const FieldElement r2 = r4 * r4;
  return {i, r4, r2, (one + i) / r2};
}

FieldElement determinant(const FieldMatrix& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

int rank(const FieldMatrix& m) {
  if (!determinant(m).is_zero()) return 3;
  for (int r1 = 0; r1 < 3; ++r1) {
    for (int r2 = r1 + 1; r2 < 3; ++r2) {
      for (int c1 = 0; c1 < 3; ++c1) {
        for (int c2 = c1 + 1; c2 < 3; ++c2) {
          const auto& a = m[static_cast<std::size_t>(r1)];
          const auto& b = m[static_cast<std::size_t>(r2)];
          const FieldElement minor = a[static_cast<std::size_t>(c1)] * b[static_cast<std::size_t>(c2)] -
                                     a[static_cast<std::size_t>(c2)] * b[static_cast<std::size_t>(c1)];
          if (!minor.is_zero()) return 2;
        }
      }
    }
  }
  for (const auto& row : m) {
    for (const auto& v : row) {
      if (!v.is_zero()) return 1;
    }
  }
  return 0;
}

PaperMatrixVerdict paper_quartic_matrix_check() {
  const auto k = quartic_field();
  const auto c = quartic_constants();
  const FieldElement zero(k, BigRational(0));
  const FieldElement one(k, BigRational(1));
  const FieldElement r4_3 = c.root2_4.pow(3);
  const FieldElement a = c.root2_4 * FieldElement(k, make_rational(1, 2));
  const FieldElement b = r4_3 * FieldElement(k, make_rational(1, 4)) + c.i * r4_3 * FieldElement(k, make_rational(1, 4));
  PaperMatrixVerdict v{{{{one, zero, zero}, {zero, a, b}, {zero, a, b}}}, zero, 0, false, ""};
  v.det = determinant(v.matrix);
  v.rank = rank(v.matrix);
  v.rows_2_3_identical = v.matrix[1] == v.matrix[2];
  v.verdict = v.det.is_zero() ? "degenerate, presumed typo" : "invertible";
  return v;
}

namespace {

MultiPoly fermat_quartic() { return canonical_curve(CurveType::Fermat, 4).polynomial(); }
MultiPoly block_quartic() { return canonical_curve(CurveType::Block, 4).polynomial(); }

}  // namespace

bool verify_equivalence(const EquivalenceWitness& w) {
  const auto k = quartic_field();
  std::array<FieldPoly, 3> images{FieldPoly::linear(w.t[0]), FieldPoly::linear(w.t[1]), FieldPoly::linear(w.t[2])};
  const FieldPoly lhs = FieldPoly::from_rational(k, w.source).substitute(images);
  const FieldPoly rhs = FieldElement(k, w.c) * FieldPoly::from_rational(k, w.target);
  return lhs == rhs && !determinant(w.t).is_zero();
}

EquivalenceWitness construct_quartic_equivalence() {
  const auto k = quartic_field();
  const auto c = quartic_constants();
  const FieldElement zero(k, BigRational(0));
  const FieldElement one(k, BigRational(1));
  // 8^(1/4) = 2^(3/4); y^4 + z^4 with y = zeta8 (w - v), z = v + w gives
  // (v + w)^4 - (v - w)^4 = 8 (v^3 w + v w^3)
  const FieldElement r8_4 = c.root2_4.pow(3);
  EquivalenceWitness w{{{{r8_4, zero, zero}, {zero, -c.zeta8, c.zeta8}, {zero, one, one}}},
                       BigRational(8),
                       fermat_quartic(),
                       block_quartic(),
                       zero};
  w.det = determinant(w.t);
  if (!verify_equivalence(w)) throw std::logic_error("quartic equivalence witness failed verification");
  return w;
}

FieldElement cross_ratio(const P1Point& a, const P1Point& b, const P1Point& c, const P1Point& d) {
  auto br = [](const P1Point& p, const P1Point& q) { return p[0] * q[1] - p[1] * q[0]; };
  return (br(a, c) * br(b, d)) / (br(a, d) * br(b, c));
}

QuarticCensus birational_census_quartics() {
  const auto w = construct_quartic_equivalence();
  (void)w;
  return {4, {CurveType::Fermat, CurveType::Block}, false};
}

}  // namespace trinomia
