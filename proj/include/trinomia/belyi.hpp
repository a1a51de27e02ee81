#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trinomia/curve.hpp"
#include "trinomia/multipoly.hpp"
#include "trinomia/orbits.hpp"
#include "trinomia/upoly.hpp"

namespace trinomia {

/// f = N / D + shift with N, D monomials of the same degree.
struct BelyiCandidate {
  TrinomialCurve curve;
  ExponentRow numerator{};
  ExponentRow denominator{};
  BigRational shift;

  int function_degree() const;  // degree of N (= degree of D)
  std::string to_string() const;
};

/// One row of the published table, in its own variable names.
struct BelyiTableRow {
  CurveType type;
  TrinomialCurve table_curve;
  BelyiCandidate table_function;  // on table_curve
  std::string degree_formula;     // e.g. "d^2-d"
  BigInt table_degree;
};

BelyiTableRow belyi_table_row(CurveType type, int d);

/// The tabulated function carried to canonical_curve(type, d) through the
/// variable relabelling found by monomial_equivalent.
BelyiCandidate table_candidate(CurveType type, int d);

/// Chart z = 1: H(y, t) = Res_x(F(x, y, 1), N - (t - shift) D) with factors
/// depending on t alone or on y alone divided out. Variables of the result:
/// y = index 1, t = index 2 (x absent).
struct FiberPolynomial {
  MultiPoly h;
  std::vector<std::string> removed;  // log of divided-out factors
};
/// Throws std::invalid_argument("candidate is constant on the curve").
FiberPolynomial fiber_polynomial(const BelyiCandidate& b);

/// Rational roots of disc_y H(y, t), t ascending. Every finite critical value
/// whose fiber has a point in the chart z = 1 with distinct y-coordinates
/// shows up here; affordable for small degrees only.
std::vector<BigRational> chart_discriminant_roots(const BelyiCandidate& b);

struct CriticalFiber {
  bool at_infinity = false;
  BigRational value;         // meaningless when at_infinity
  std::vector<int> profile;  // descending, sums to the degree
};

/// Critical values that are not rational, as the roots of `values`.
struct IrrationalCriticalFamily {
  UPoly values;
  int points_per_value = 0;
  int ramification = 0;
};

struct BelyiReport {
  int degree = 0;           // algebraic fiber count over a generic value
  int analytic_degree = 0;  // total pole order from local analysis
  int genus = 0;
  std::vector<CriticalFiber> fibers;  // rational values ascending, then infinity
  std::vector<IrrationalCriticalFamily> irrational;
  bool non_rational_critical_value = false;
  std::size_t critical_value_count = 0;  // over the algebraic closure
  long ramification_total = 0;           // sum of (e - 1)
  long rh_defect = 0;  // (2g - 2) - (-2 deg + sum (e - 1))
  BigRational generic_value;         // t0
  BigRational second_generic_value;  // t1
  int second_fiber_count = 0;
  bool algebraic_profiles_agree = false;  // every rational fiber re-derived by resultants
  std::string normalization;  // Moebius map sending the values to 0, 1, infinity
  std::vector<std::string> log;
};

/// Degree of the induced map to P^1: the number of distinct points in the
/// fiber over the smallest positive integer that is not a critical value,
/// computed with resultants under a generic projection.
int map_degree(const BelyiCandidate& b);

/// Full report. Throws std::invalid_argument for a candidate constant on the
/// curve or a curve that is not smooth along the coordinate lines.
BelyiReport critical_values(const BelyiCandidate& b);

struct BelyiHeightRow {
  CurveType type;
  int degree;
  std::size_t critical_value_count;
  BigInt table_degree;
  bool matches_table;
  bool rh_ok;
};
/// One row per type; every degree is only an upper bound on the Belyi height.
std::vector<BelyiHeightRow> belyi_height_report(int d);

}  // namespace trinomia
