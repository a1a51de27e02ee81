#include "doctest.h"
#include "trinomia/curve.hpp"
#include "trinomia/curve_io.hpp"

using namespace trinomia;

TEST_CASE("canonical curves") {
  CHECK(canonical_curve(CurveType::Fermat, 4).equation() == canonical_curve(CurveType::Fermat, 4).polynomial().to_string());
  const MultiPoly x = MultiPoly::variable(3, 0);
  const MultiPoly y = MultiPoly::variable(3, 1);
  const MultiPoly z = MultiPoly::variable(3, 2);
  CHECK(canonical_curve(CurveType::Fermat, 4).polynomial() == x.pow(4) + y.pow(4) + z.pow(4));
  CHECK(canonical_curve(CurveType::Klein, 4).polynomial() == x * y.pow(3) + y * z.pow(3) + z * x.pow(3));
  CHECK(canonical_curve(CurveType::Block, 3).polynomial() == x.pow(3) + y.pow(2) * z + y * z.pow(2));
  CHECK(canonical_curve(CurveType::SmallJordan, 5).polynomial() == x.pow(5) + y.pow(5) + y * z.pow(4));
  CHECK(canonical_curve(CurveType::BigJordan, 5).polynomial() == x.pow(5) + x * y.pow(4) + y * z.pow(4));
  CHECK_THROWS_WITH(canonical_curve(CurveType::Fermat, 2), "degree below cubic");
}

TEST_CASE("determinants match the closed forms") {
  CHECK(determinant(canonical_matrix(CurveType::Klein, 4)) == 28);
  CHECK(determinant(PowerMatrix({{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}})) == 0);
  CHECK(determinant_formula(CurveType::Block, 5) == 75);
  CHECK(determinant_formula(CurveType::Fermat, 3) == 27);
  CHECK(determinant_formula(CurveType::Klein, 3) == 9);
  for (int d = 3; d <= 50; ++d) {
    for (CurveType t : kAllCurveTypes) {
      const BigInt det = determinant(canonical_matrix(t, d));
      CHECK(det == determinant_formula(t, d));
      CHECK(det != 0);
      CHECK(det % d == 0);
      for (const auto& row : canonical_matrix(t, d).rows()) CHECK(row[0] + row[1] + row[2] == d);
    }
  }
}

TEST_CASE("power matrix validation") {
  CHECK_THROWS(PowerMatrix({{{3, 0, 0}, {0, 2, 0}, {0, 0, 3}}}));
  CHECK_THROWS(PowerMatrix({{{4, -1, 0}, {0, 3, 0}, {0, 0, 3}}}));
  CHECK_THROWS(TrinomialCurve(canonical_matrix(CurveType::Fermat, 3), {BigRational(1), BigRational(0), BigRational(1)}));
}

TEST_CASE("zero pattern encoding") {
  const ZeroPattern p = canonical_matrix(CurveType::Klein, 4).pattern();
  CHECK(p.to_string() == "[[*,*,0],[0,*,*],[*,0,*]]");
  CHECK(ZeroPattern::from_row_major_code(p.row_major_code()) == p);
  CHECK(p.canonical().row_major_code() <= p.row_major_code());
  CHECK(!p.has_zero_row());
  CHECK(!p.has_full_column());
}

TEST_CASE("common monomial factor") {
  CHECK(!common_monomial_factor(canonical_curve(CurveType::Block, 3)));
  const TrinomialCurve c(PowerMatrix({{{1, 2, 0}, {1, 0, 2}, {1, 1, 1}}}));
  const auto m = common_monomial_factor(c);
  REQUIRE(m);
  CHECK(*m == ExponentRow{1, 0, 0});
  const TrinomialCurve e(PowerMatrix({{{0, 2, 1}, {3, 0, 0}, {3, 0, 0}}}));
  CHECK(!common_monomial_factor(e));
}

TEST_CASE("curve JSON round trip") {
  const auto j = nlohmann::json::parse(R"({"d": 4, "P": [[4,0,0],[0,4,0],[0,1,3]], "A": ["1","3/2","-2"], "type": "small_jordan"})");
  const TrinomialCurve c = curve_from_json(j);
  CHECK(c.coefficients()[1] == make_rational(3, 2));
  CHECK(c.type() == CurveType::SmallJordan);
  const TrinomialCurve back = curve_from_json(curve_to_json(c));
  CHECK(back.power_matrix() == c.power_matrix());
  CHECK(back.coefficients() == c.coefficients());
  CHECK(curve_to_json(back) == curve_to_json(c));
  CHECK_THROWS(curve_from_json(nlohmann::json::parse(R"({"d": 5, "P": [[4,0,0],[0,4,0],[0,1,3]]})")));
  CHECK_THROWS(curve_from_json(nlohmann::json::parse(R"({"P": [[4,0,0],[0,4,0]]})")));
  CHECK_THROWS(curve_from_json(nlohmann::json::parse(R"({"P": [[4,0,0],[0,4,0],[0,1,3]], "type": "elliptic"})")));
}
