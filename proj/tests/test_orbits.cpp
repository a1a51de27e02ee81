#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "trinomia/orbits.hpp"

using namespace trinomia;

namespace {

// Burnside count for S3 x S3 acting on 3x3 boolean matrices: a pair (r, c)
// fixes 2^(number of cycles of the induced permutation on the 9 cells).
int burnside_orbit_count() {
  const auto& perms = s3_elements();
  int total = 0;
  for (const auto& r : perms) {
    for (const auto& c : perms) {
      std::array<bool, 9> seen{};
      int cycles = 0;
      for (int cell = 0; cell < 9; ++cell) {
        if (seen[static_cast<std::size_t>(cell)]) continue;
        ++cycles;
        int cur = cell;
        while (!seen[static_cast<std::size_t>(cur)]) {
          seen[static_cast<std::size_t>(cur)] = true;
          cur = 3 * r[static_cast<std::size_t>(cur / 3)] + c[static_cast<std::size_t>(cur % 3)];
        }
      }
      total += 1 << cycles;
    }
  }
  return total / 36;
}

ZeroPattern pattern_of(std::initializer_list<int> cells) {
  std::uint16_t bits = 0;
  int k = 0;
  for (int v : cells) {
    if (v != 0) bits |= static_cast<std::uint16_t>(1U << k);
    ++k;
  }
  return ZeroPattern(bits);
}

}  // namespace

TEST_CASE("pattern enumeration") {
  const auto all = enumerate_patterns();
  CHECK(all.size() == 512);
  std::set<std::uint16_t> codes;
  for (auto p : all) codes.insert(p.bits());
  CHECK(codes.size() == 512);
  CHECK(codes.count(0) == 1);
  CHECK(codes.count(0x1FF) == 1);
}

TEST_CASE("orbit decomposition") {
  const auto orbits = orbit_decompose(enumerate_patterns());
  CHECK(orbits.size() == static_cast<std::size_t>(burnside_orbit_count()));
  CHECK(orbits.size() == 36);
  std::size_t total = 0;
  for (const auto& o : orbits) {
    total += o.members.size();
    CHECK(36 % o.members.size() == 0);
  }
  CHECK(total == 512);
  CHECK(orbits.front().representative.bits() == 0);
  CHECK(orbits.front().members.size() == 1);
  const auto diag = pattern_of({1, 0, 0, 0, 1, 0, 0, 0, 1});
  const auto it = std::find_if(orbits.begin(), orbits.end(), [&](const OrbitReport& o) {
    return std::find(o.members.begin(), o.members.end(), diag) != o.members.end();
  });
  REQUIRE(it != orbits.end());
  CHECK(it->members.size() == 6);
}

TEST_CASE("line filters") {
  const auto orbits = orbit_decompose(enumerate_patterns());
  const auto s1 = filter_zero_lines(orbits);
  const auto s2 = filter_full_lines(s1);
  CHECK(s1.size() == 17);
  CHECK(s2.size() == 6);
  std::vector<std::uint16_t> keys;
  for (const auto& o : s2) keys.push_back(o.representative.row_major_code());
  // row-major codes of the six survivors, first entry most significant
  CHECK(keys == std::vector<std::uint16_t>{0b001001110, 0b001010100, 0b001010101, 0b001011110, 0b001110110,
                                           0b011101110});
  const auto klein = canonical_matrix(CurveType::Klein, 4).pattern().canonical();
  CHECK(std::any_of(s2.begin(), s2.end(), [&](const OrbitReport& o) { return o.representative == klein; }));
  CHECK(std::none_of(s2.begin(), s2.end(), [](const OrbitReport& o) { return o.representative.bits() == 0x1FF; }));
}

TEST_CASE("exponent resolution examples") {
  const auto block = resolve_exponents(canonical_matrix(CurveType::Block, 4).pattern(), 4);
  REQUIRE(block.classes.size() == 1);
  CHECK(block.classes.front().representative == canonical_exponent_key(PowerMatrix({{{4, 0, 0}, {0, 1, 3}, {0, 3, 1}}})));
  bool saw_22 = false;
  for (const auto& c : block.candidates) {
    if (c.matrix.row(1) == ExponentRow{0, 2, 2} || c.matrix.row(2) == ExponentRow{0, 2, 2}) {
      saw_22 = true;
      CHECK(!c.passes_prefilter);
    }
  }
  CHECK(saw_22);

  const auto sj = resolve_exponents(canonical_matrix(CurveType::SmallJordan, 3).pattern(), 3);
  REQUIRE(sj.classes.size() == 1);
  CHECK(sj.classes.front().representative == canonical_exponent_key(canonical_matrix(CurveType::SmallJordan, 3)));
  bool saw_variant = false;
  for (const auto& c : sj.candidates) {
    if (c.matrix == PowerMatrix({{{3, 0, 0}, {0, 3, 0}, {0, 2, 1}}})) {
      saw_variant = true;
      REQUIRE(c.verdict);
      CHECK(c.verdict->status == SmoothStatus::Singular);
      CHECK(c.verdict->witness == RationalPoint{BigRational(0), BigRational(0), BigRational(1)});
    }
  }
  CHECK(saw_variant);

  for (int d = 3; d <= 8; ++d) {
    const auto f = resolve_exponents(canonical_matrix(CurveType::Fermat, d).pattern(), d);
    CHECK(f.candidates.size() == 1);
    REQUIRE(f.classes.size() == 1);
    CHECK(f.classes.front().representative == canonical_exponent_key(canonical_matrix(CurveType::Fermat, d)));
  }
}

TEST_CASE("prefilter is only an optimisation") {
  const auto orbits = filter_full_lines(filter_zero_lines(orbit_decompose(enumerate_patterns())));
  for (int d = 3; d <= 8; ++d) {
    for (const auto& o : orbits) {
      const auto with = resolve_exponents(o.representative, d, true);
      const auto without = resolve_exponents(o.representative, d, false);
      REQUIRE(with.classes.size() == without.classes.size());
      for (std::size_t k = 0; k < with.classes.size(); ++k) {
        CHECK(with.classes[k].representative == without.classes[k].representative);
      }
    }
  }
}

TEST_CASE("monomial equivalence") {
  for (int d = 3; d <= 6; ++d) {
    const TrinomialCurve big_table(PowerMatrix({{{d, 0, 0}, {0, d - 1, 1}, {1, 0, d - 1}}}));
    CHECK(monomial_equivalent(big_table, canonical_curve(CurveType::BigJordan, d)).equivalent);
    const TrinomialCurve klein_a(PowerMatrix({{{1, d - 1, 0}, {0, 1, d - 1}, {d - 1, 0, 1}}}));
    const TrinomialCurve klein_b(PowerMatrix({{{d - 1, 1, 0}, {0, d - 1, 1}, {1, 0, d - 1}}}));
    const auto eq = monomial_equivalent(klein_a, klein_b);
    CHECK(eq.equivalent);
    CHECK(klein_a.power_matrix().with_columns(eq.columns).with_rows(eq.rows) == klein_b.power_matrix());
  }
  CHECK(!monomial_equivalent(canonical_curve(CurveType::Fermat, 5), canonical_curve(CurveType::Klein, 5)).equivalent);
  const TrinomialCurve scaled(canonical_matrix(CurveType::Fermat, 3), {BigRational(2), BigRational(1), BigRational(1)});
  CHECK(!monomial_equivalent(scaled, canonical_curve(CurveType::Fermat, 3)).equivalent);
}

TEST_CASE("classification") {
  for (int d = 3; d <= 8; ++d) {
    const auto cl = classify(d);
    CHECK(cl.pattern_count == 512);
    CHECK(cl.orbit_count == 36);
    CHECK(cl.after_zero_line == 17);
    CHECK(cl.after_full_line == 6);
    REQUIRE(cl.curves.size() == 5);
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(cl.curves[k].type == kAllCurveTypes[k]);
      CHECK(certify_smooth(cl.curves[k].curve).status == SmoothStatus::SmoothCertified);
      CHECK(!common_monomial_factor(cl.curves[k].curve));
      CHECK(determinant(cl.curves[k].curve.power_matrix()) != 0);
    }
    REQUIRE(cl.excluded.size() == 1);
    CHECK(cl.excluded.front().headline_verdict.status == SmoothStatus::Singular);
    CHECK(cl.excluded.front().headline_verdict.witness ==
          RationalPoint{BigRational(0), BigRational(0), BigRational(1)});
    int evaluated = 0;
    for (const auto& c : cl.excluded.front().candidates) {
      CHECK(c.degenerate);
      if (!c.verdict) continue;
      ++evaluated;
      CHECK(c.verdict->status == SmoothStatus::Singular);
    }
    CHECK(evaluated >= 1);
  }
  CHECK_THROWS_WITH(classify(2), "degree below cubic");
}

TEST_CASE("classification is independent of enumeration order") {
  const auto base = classify(4);
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    auto order = enumerate_patterns();
    std::shuffle(order.begin(), order.end(), rng);
    const auto cl = classify(4, order);
    REQUIRE(cl.orbits.size() == base.orbits.size());
    for (std::size_t k = 0; k < cl.orbits.size(); ++k) {
      CHECK(cl.orbits[k].representative == base.orbits[k].representative);
      CHECK(cl.orbits[k].members == base.orbits[k].members);
      CHECK(cl.orbits[k].killed_by == base.orbits[k].killed_by);
    }
    REQUIRE(cl.curves.size() == base.curves.size());
    for (std::size_t k = 0; k < cl.curves.size(); ++k) {
      CHECK(cl.curves[k].curve.power_matrix() == base.curves[k].curve.power_matrix());
    }
  }
}
