#include "doctest.h"
#include <algorithm>

#include "trinomia/prime_field.hpp"
#include "trinomia/smoothness.hpp"

using namespace trinomia;

namespace {

TrinomialCurve printed_small_jordan(int d) {
  return TrinomialCurve(PowerMatrix({{{1, d - 1, 0}, {0, d, 0}, {0, 0, d}}}));
}

RationalPoint pt(long a, long b, long c) { return {BigRational(a), BigRational(b), BigRational(c)}; }

// Independent oracle: brute-force evaluation of the four forms at a point of
// P^2(F_p) straight from the exponent matrix.
bool singular_by_hand(const TrinomialCurve& c, const FpPoint& q, std::uint64_t p) {
  std::array<std::uint64_t, 4> acc{};
  for (int i = 0; i < 3; ++i) {
    const auto& r = c.power_matrix().row(i);
    const std::uint64_t a = reduce_mod(c.coefficients()[static_cast<std::size_t>(i)], p);
    auto mono = [&](int skip) {
      std::uint64_t v = a;
      for (int k = 0; k < 3; ++k) {
        int e = r[static_cast<std::size_t>(k)];
        if (k == skip) {
          if (e == 0) return std::uint64_t{0};
          v = mul_mod(v, static_cast<std::uint64_t>(e) % p, p);
          --e;
        }
        v = mul_mod(v, pow_mod(q[static_cast<std::size_t>(k)], static_cast<std::uint64_t>(e), p), p);
      }
      return v;
    };
    acc[0] = (acc[0] + mono(-1)) % p;
    for (int k = 0; k < 3; ++k) acc[static_cast<std::size_t>(k + 1)] = (acc[static_cast<std::size_t>(k + 1)] + mono(k)) % p;
  }
  return acc == std::array<std::uint64_t, 4>{0, 0, 0, 0};
}

}  // namespace

TEST_CASE("coordinate point check") {
  CHECK(coordinate_point_check(printed_small_jordan(3)) == std::vector<RationalPoint>{pt(1, 0, 0)});
  for (int d = 3; d <= 6; ++d) {
    const TrinomialCurve excluded(PowerMatrix({{{0, d - 1, 1}, {d, 0, 0}, {d, 0, 0}}}));
    CHECK(excluded.polynomial().coefficient({d, 0, 0}) == 2);
    CHECK(coordinate_point_check(excluded) == std::vector<RationalPoint>{pt(0, 0, 1)});
    CHECK(coordinate_point_check(canonical_curve(CurveType::Fermat, d)).empty());
  }
}

TEST_CASE("finite field scans") {
  CHECK(singular_points_mod_p(canonical_curve(CurveType::Fermat, 4), 5).empty());
  const auto sj = singular_points_mod_p(printed_small_jordan(3), 7);
  CHECK(std::find(sj.begin(), sj.end(), FpPoint{1, 0, 0}) != sj.end());
  const TrinomialCurve triple(PowerMatrix({{{3, 0, 0}, {3, 0, 0}, {3, 0, 0}}}));
  const auto line = singular_points_mod_p(triple, 7);
  CHECK(line.size() == 8);
  for (const auto& q : line) CHECK(q[0] == 0);
  const TrinomialCurve frac(canonical_matrix(CurveType::Fermat, 3), {make_rational(1, 7), BigRational(1), BigRational(1)});
  CHECK_THROWS_WITH(singular_points_mod_p(frac, 7), doctest::Contains("bad reduction"));
}

TEST_CASE("scan agrees with a hand evaluator") {
  for (CurveType t : kAllCurveTypes) {
    for (int d = 3; d <= 5; ++d) {
      for (const TrinomialCurve& c : {canonical_curve(t, d), printed_small_jordan(d)}) {
        const std::uint64_t p = 11;
        std::vector<FpPoint> oracle;
        for (std::uint64_t a = 0; a < p; ++a) {
          for (std::uint64_t b = 0; b < p; ++b) {
            if (singular_by_hand(c, {1, a, b}, p)) oracle.push_back({1, a, b});
          }
        }
        for (std::uint64_t b = 0; b < p; ++b) {
          if (singular_by_hand(c, {0, 1, b}, p)) oracle.push_back({0, 1, b});
        }
        if (singular_by_hand(c, {0, 0, 1}, p)) oracle.push_back({0, 0, 1});
        CHECK(singular_points_mod_p(c, p) == oracle);
      }
    }
  }
}

TEST_CASE("certification verdicts") {
  for (int d = 3; d <= 8; ++d) {
    for (CurveType t : kAllCurveTypes) {
      const auto v = certify_smooth(canonical_curve(t, d));
      CHECK(v.status == SmoothStatus::SmoothCertified);
      REQUIRE(v.certifying_prime);
      CHECK(*v.certifying_prime > static_cast<std::uint64_t>(d));
    }
    const auto bad = certify_smooth(printed_small_jordan(d));
    CHECK(bad.status == SmoothStatus::Singular);
    CHECK(bad.witness == pt(1, 0, 0));
    for (std::uint64_t p : default_prime_budget(canonical_curve(CurveType::Fermat, d))) {
      const auto s = singular_points_mod_p(printed_small_jordan(d), p);
      CHECK(std::find(s.begin(), s.end(), FpPoint{1, 0, 0}) != s.end());
    }
  }
  const auto block = certify_smooth(canonical_curve(CurveType::Block, 5), {7, 11});
  CHECK(block.status == SmoothStatus::SmoothCertified);
  CHECK((block.certifying_prime == 7U || block.certifying_prime == 11U));

  // d = 5 divides 5; the next budget prime is used
  const auto fermat = certify_smooth(canonical_curve(CurveType::Fermat, 5), {5, 7});
  CHECK(fermat.primes_skipped == std::vector<std::uint64_t>{5});
  CHECK(fermat.certifying_prime == 7U);
  CHECK_THROWS(certify_smooth(canonical_curve(CurveType::Fermat, 5), {}));
  CHECK_THROWS(certify_smooth(canonical_curve(CurveType::Fermat, 5), {5}));

  const TrinomialCurve excluded(PowerMatrix({{{0, 2, 1}, {3, 0, 0}, {3, 0, 0}}}));
  const auto ev = certify_smooth(excluded);
  CHECK(ev.status == SmoothStatus::Singular);
  CHECK(ev.witness == pt(0, 0, 1));
}

TEST_CASE("singular points off the vertices are not missed") {
  // z (x^2 + y^2 + z^2): singular at (+-i : 1 : 0), invisible over F_p for p = 3 mod 4
  const TrinomialCurve c(PowerMatrix({{{2, 0, 1}, {0, 2, 1}, {0, 0, 3}}}));
  CHECK(determinant(c.power_matrix()) == 12);
  CHECK(coordinate_point_check(c).empty());
  CHECK(singular_points_mod_p(c, 7).empty());
  const auto v = certify_smooth(c, {7});
  CHECK(v.status == SmoothStatus::Singular);
  CHECK(!v.witness);
  CHECK(v.witness_locus.find("z = 0") != std::string::npos);
}
