#include "doctest.h"
#include "trinomia/diagonal.hpp"

using namespace trinomia;

namespace {

// Full cube scan, no slicing: count v in (Z/N)^3 with P v constant mod N.
long cube_count(const PowerMatrix& p, long n) {
  long count = 0;
  for (long a = 0; a < n; ++a) {
    for (long b = 0; b < n; ++b) {
      for (long c = 0; c < n; ++c) {
        long s[3];
        for (int i = 0; i < 3; ++i) s[i] = (p.at(i, 0) * a + p.at(i, 1) * b + p.at(i, 2) * c) % n;
        if (s[0] == s[1] && s[1] == s[2]) ++count;
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("difference matrices") {
  for (int d = 3; d <= 6; ++d) {
    CHECK(difference_matrix(canonical_matrix(CurveType::Fermat, d)) == IntMatrix{{d, -d, 0}, {0, d, -d}});
  }
  CHECK(difference_matrix(canonical_matrix(CurveType::Klein, 4)) == IntMatrix{{1, 2, -3}, {-3, 1, 2}});
  CHECK(difference_matrix(canonical_matrix(CurveType::Block, 4)) == IntMatrix{{4, -3, -1}, {0, 2, -2}});
}

TEST_CASE("group structure examples") {
  const auto f = diagonal_automorphism_group(canonical_curve(CurveType::Fermat, 3));
  CHECK(f.invariants == std::vector<BigInt>{3, 3});
  CHECK(f.order == 9);
  const auto k = diagonal_automorphism_group(canonical_curve(CurveType::Klein, 4));
  CHECK(k.invariants == std::vector<BigInt>{1, 7});
  CHECK(k.order == 7);
  REQUIRE(k.generators.size() == 1);
  CHECK(k.generators.front() == ExponentTriple{0, 1, 3});
  const auto b = diagonal_automorphism_group(canonical_curve(CurveType::Block, 4));
  CHECK(b.invariants == std::vector<BigInt>{1, 8});
  CHECK_THROWS_WITH(diagonal_automorphism_group(PowerMatrix({{{1, 1, 1}, {1, 1, 1}, {3, 0, 0}}})),
                    "degenerate power matrix");
}

TEST_CASE("automorphism condition") {
  const PowerMatrix klein = canonical_matrix(CurveType::Klein, 4);
  CHECK(verify_automorphism(klein, {1, 2, 4}, 7));
  CHECK(!verify_automorphism(klein, {1, 4, 2}, 7));
  for (int n = 1; n <= 9; ++n) CHECK(verify_automorphism(klein, {1, 1, 1}, n));
  CHECK(!verify_automorphism(canonical_matrix(CurveType::Fermat, 3), {1, 0, 0}, 2));
}

TEST_CASE("order equals det / d") {
  for (int d = 3; d <= 12; ++d) {
    for (CurveType t : kAllCurveTypes) {
      const PowerMatrix p = canonical_matrix(t, d);
      const auto g = diagonal_automorphism_group(p);
      CHECK(g.order * d == determinant_formula(t, d));
      CHECK(g.order >= 2);
      CHECK(g.level % g.invariants[0] == 0);
      for (const auto& v : g.generators) CHECK(verify_automorphism(p, v, g.level));
    }
  }
}

TEST_CASE("brute force oracle") {
  CHECK(brute_force_group_order(canonical_matrix(CurveType::Fermat, 3)) == 9);
  CHECK(brute_force_group_order(canonical_matrix(CurveType::Klein, 4)) == 7);
  CHECK(brute_force_group_order(canonical_matrix(CurveType::Klein, 3)) == 3);
  for (int d = 3; d <= 5; ++d) {
    for (CurveType t : kAllCurveTypes) {
      const PowerMatrix p = canonical_matrix(t, d);
      CHECK(brute_force_group_order(p) == diagonal_automorphism_group(p).order);
      if (d <= 4) {
        const long n = BigInt(abs(determinant(p))).get_si();
        CHECK(cube_count(p, n) == n * brute_force_group_order(p).get_si());
      }
    }
  }
  CHECK_THROWS_WITH(brute_force_group_order(canonical_matrix(CurveType::Fermat, 30)), "use SNF path");
}

TEST_CASE("the literal mod-d reading undercounts") {
  CHECK(mod_d_kernel_order(canonical_matrix(CurveType::Klein, 4)) == 1);
}
