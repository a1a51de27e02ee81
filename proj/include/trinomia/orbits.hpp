#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "trinomia/curve.hpp"
#include "trinomia/smoothness.hpp"

namespace trinomia {

enum class KillStage { None, ZeroLine, FullLine, Singular };

std::string_view kill_stage_name(KillStage s);

struct OrbitReport {
  int id = 0;
  ZeroPattern representative;  // lex-min over S3 x S3
  std::vector<ZeroPattern> members;  // ascending by row-major code
  KillStage killed_by = KillStage::None;
  std::optional<CurveType> type;
  std::optional<PowerMatrix> resolved;  // filled by classify() for survivors
};

/// All 512 patterns, in row-major code order.
std::vector<ZeroPattern> enumerate_patterns();

/// Orbits of S3 x S3 (row and column permutations), ordered by the code of
/// the representative. The result does not depend on input order.
std::vector<OrbitReport> orbit_decompose(const std::vector<ZeroPattern>& patterns);

/// Drops orbits whose patterns have an all-zero row or an all-zero column.
std::vector<OrbitReport> filter_zero_lines(const std::vector<OrbitReport>& orbits);
/// Drops orbits whose patterns have a row or a column without zeros.
std::vector<OrbitReport> filter_full_lines(const std::vector<OrbitReport>& orbits);

/// Type attached to the orbit of a pattern, if it is one of the five.
std::optional<CurveType> type_of_pattern(ZeroPattern p);

struct ExponentCandidate {
  PowerMatrix matrix;
  bool passes_prefilter = true;  // a row with a single zero contains a 1
  bool degenerate = false;       // two equal rows
  std::optional<SmoothnessVerdict> verdict;  // absent when the prefilter rejects
};

struct ExponentClass {
  PowerMatrix representative;  // canonical key under variable permutation
  std::vector<PowerMatrix> members;
};

struct Resolution {
  std::vector<ExponentCandidate> candidates;
  std::vector<ExponentClass> classes;  // smooth, non-degenerate survivors
};

/// Positive exponents at the stars with row sums d, then the single-zero-row
/// prefilter (skipped when use_prefilter is false), the degeneracy mark and
/// the smoothness oracle. Survivors are grouped under simultaneous variable
/// permutation.
Resolution resolve_exponents(ZeroPattern pattern, int d, bool use_prefilter = true);

/// Orders rows and picks the lexicographically smallest column relabelling.
PowerMatrix canonical_exponent_key(const PowerMatrix& p);

struct MonomialEquivalence {
  bool equivalent = false;
  /// b's variable j is a's variable columns[j]; b's term i is a's term rows[i].
  std::array<int, 3> columns{0, 1, 2};
  std::array<int, 3> rows{0, 1, 2};
};

/// Searches the 36 row/column relabellings that carry a to b, coefficients
/// included.
MonomialEquivalence monomial_equivalent(const TrinomialCurve& a, const TrinomialCurve& b);

struct ClassifiedCurve {
  CurveType type;
  TrinomialCurve curve;  // as produced by resolve_exponents
  MonomialEquivalence to_canonical;  // curve -> canonical_curve(type, d)
};

struct ExcludedOrbit {
  ZeroPattern pattern;  // member in the layout [[0,*,*],[*,0,0],[*,0,0]]
  std::vector<ExponentCandidate> candidates;
  /// y^(d-1) z + 2 x^d, the merged form of the candidate with the largest
  /// y exponent
  TrinomialCurve headline;
  SmoothnessVerdict headline_verdict;
};

struct Classification {
  int degree = 0;
  std::size_t pattern_count = 0;
  std::vector<OrbitReport> orbits;  // all of them, with kill stages
  std::size_t orbit_count = 0;
  std::size_t after_zero_line = 0;
  std::size_t after_full_line = 0;
  std::vector<ClassifiedCurve> curves;  // ordered as kAllCurveTypes
  std::vector<ExcludedOrbit> excluded;
};

/// Throws std::invalid_argument("degree below cubic") for d < 3.
Classification classify(int d);
/// Same pipeline fed with a caller-chosen enumeration order.
Classification classify(int d, const std::vector<ZeroPattern>& enumeration);

}  // namespace trinomia
