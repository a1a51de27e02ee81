#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trinomia/curve.hpp"
#include "trinomia/multipoly.hpp"
#include "trinomia/number_field.hpp"

namespace trinomia {

struct TernaryCubicInvariants {
  BigRational s;  // degree 4, Aronhold S in the bracket normalization
  BigRational t;  // degree 6
  /// 4 A^3 + 27 B^2 with A = S / S(y^2 z - x^3 - x z^2), B = T / T(y^2 z - x^3 - z^3);
  /// zero exactly on singular cubics
  BigRational discriminant;
  std::optional<BigRational> j;  // empty when discriminant == 0
};

/// S = [abc][abd][acd][bcd] and T = [abc][abd][ace][bcf][def]^2 evaluated on
/// f = (a.x)^3 = ... with umbral coefficients c_ijk / (3! / (i! j! k!)).
/// Throws std::invalid_argument unless f is a ternary cubic form.
TernaryCubicInvariants cubic_invariants(const MultiPoly& f);

/// Throws std::invalid_argument("j-invariant needs a cubic") when d != 3.
std::optional<BigRational> j_invariant_cubic(const TrinomialCurve& c);
std::optional<BigRational> j_invariant_cubic(const MultiPoly& f);

struct CubicClass {
  BigRational j;
  std::vector<CurveType> members;
};
/// Groups the five canonical cubics by j (ascending).
std::vector<CubicClass> birational_census_cubics();

/// Q(theta), theta = 2^(1/4) + i, minimal polynomial t^8 + 4t^6 + 2t^4 + 28t^2 + 1.
std::shared_ptr<const NumberField> quartic_field();

struct QuarticConstants {
  FieldElement i;
  FieldElement root2_4;  // 2^(1/4)
  FieldElement root2;    // sqrt 2
  FieldElement zeta8;    // (1 + i) / sqrt 2
};
QuarticConstants quartic_constants();

using FieldMatrix = std::array<std::array<FieldElement, 3>, 3>;

FieldElement determinant(const FieldMatrix& m);
int rank(const FieldMatrix& m);

struct PaperMatrixVerdict {
  FieldMatrix matrix;
  FieldElement det;
  int rank;
  bool rows_2_3_identical;
  std::string verdict;
};
/// The printed substitution matrix [[1,0,0],[0,a,b],[0,a,b]],
/// a = 2^(1/4)/2, b = 2^(3/4)/4 + i 2^(3/4)/4.
PaperMatrixVerdict paper_quartic_matrix_check();

struct EquivalenceWitness {
  FieldMatrix t;  // (x, y, z)^T = t (u, v, w)^T
  BigRational c;  // F_source(t (u,v,w)) = c F_target(u,v,w)
  MultiPoly source;  // x^4 + y^4 + z^4
  MultiPoly target;  // u^4 + v^3 w + v w^3
  FieldElement det;
};
/// x = 8^(1/4) u, y = zeta8 (w - v), z = v + w. Verified by exact
/// substitution; throws std::logic_error if the identity fails.
EquivalenceWitness construct_quartic_equivalence();
bool verify_equivalence(const EquivalenceWitness& w);

using P1Point = std::array<FieldElement, 2>;
/// (a, b; c, d) = [a c][b d] / ([a d][b c]) with [p q] = p0 q1 - p1 q0.
FieldElement cross_ratio(const P1Point& a, const P1Point& b, const P1Point& c, const P1Point& d);

struct QuarticCensus {
  int count;  // 4
  std::pair<CurveType, CurveType> verified_coincidence;  // Fermat ~ Block
  bool distinctness_verified;  // false: taken on trust
};
QuarticCensus birational_census_quartics();

}  // namespace trinomia
