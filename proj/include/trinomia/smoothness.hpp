#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trinomia/curve.hpp"
#include "trinomia/multipoly.hpp"

namespace trinomia {

using RationalPoint = std::array<BigRational, 3>;
using FpPoint = std::array<std::uint64_t, 3>;

enum class SmoothStatus { SmoothCertified, Singular, Undetermined };

std::string_view status_name(SmoothStatus s);

struct SmoothnessVerdict {
  SmoothStatus status = SmoothStatus::Undetermined;
  /// Exact rational singular point, when one exists.
  std::optional<RationalPoint> witness;
  /// Singular points off the vertices with no rational representative are
  /// described instead, e.g. "z = 0, x^2 + 1 = 0 (y = 1)".
  std::string witness_locus;
  std::optional<std::uint64_t> certifying_prime;
  std::vector<std::uint64_t> primes_tried;
  std::vector<std::uint64_t> primes_skipped;  // failed the good-prime test
  std::string rationale;
};

/// Coordinate points (1:0:0), (0:1:0), (0:0:1) at which F and its three
/// partials vanish exactly.
std::vector<RationalPoint> coordinate_point_check(const TrinomialCurve& c);

/// Singular points of F on the coordinate lines away from the coordinate
/// points, decided exactly over the algebraic closure. Each entry is either
/// a rational point or a locus description.
struct LineSingularity {
  std::optional<RationalPoint> point;
  std::string locus;
};
std::vector<LineSingularity> coordinate_line_check(const TrinomialCurve& c);

/// Exhaustive scan of P^2(F_p); points are normalized with the first nonzero
/// coordinate equal to 1. Throws "bad reduction" when p divides a denominator.
std::vector<FpPoint> singular_points_mod_p(const MultiPoly& f, std::uint64_t p);
std::vector<FpPoint> singular_points_mod_p(const TrinomialCurve& c, std::uint64_t p);

/// Good primes: p > d, p does not divide det P, any coefficient numerator
/// or denominator.
bool is_good_prime(const TrinomialCurve& c, std::uint64_t p);
std::vector<std::uint64_t> default_prime_budget(const TrinomialCurve& c, int count = 3);

/// Singular (exact witness or locus) if a coordinate point or coordinate
/// line carries a singular point. Otherwise, when det P != 0, the torus is
/// smooth in characteristic 0 and in every good characteristic, and a good
/// prime whose full P^2(F_p) scan is clean certifies smoothness. With
/// det P == 0 and no witness the verdict is Undetermined.
/// Throws std::invalid_argument on an empty budget or a budget without good
/// primes.
SmoothnessVerdict certify_smooth(const TrinomialCurve& c, const std::vector<std::uint64_t>& prime_budget);
SmoothnessVerdict certify_smooth(const TrinomialCurve& c);

std::string point_to_string(const RationalPoint& p);
std::string point_to_string(const FpPoint& p);

}  // namespace trinomia
