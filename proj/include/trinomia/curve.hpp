#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "trinomia/multipoly.hpp"
#include "trinomia/rational.hpp"
#include "trinomia/smith.hpp"

namespace trinomia {

/// 3x3 star/zero skeleton of a power matrix. Bit (3*row + col) is set when
/// the exponent is nonzero.
class ZeroPattern {
 public:
  constexpr ZeroPattern() = default;
  constexpr explicit ZeroPattern(std::uint16_t bits) : bits_(bits & 0x1FFU) {}

  constexpr bool star(int row, int col) const { return ((bits_ >> (3 * row + col)) & 1U) != 0; }
  constexpr std::uint16_t bits() const { return bits_; }

  /// Row-major reading, entry (0,0) most significant; this is the order the
  /// lexicographic canonical form minimizes.
  std::uint16_t row_major_code() const;
  static ZeroPattern from_row_major_code(std::uint16_t code);

  /// Image under row permutation r and column permutation c:
  /// result(i, j) = this(r[i], c[j]).
  ZeroPattern permuted(const std::array<int, 3>& r, const std::array<int, 3>& c) const;
  /// Lexicographically minimal pattern over the S3 x S3 orbit.
  ZeroPattern canonical() const;

  bool has_zero_row() const;
  bool has_zero_column() const;
  bool has_full_row() const;
  bool has_full_column() const;

  std::string to_string() const;  // e.g. "[[*,0,0],[0,*,0],[0,0,*]]"

  friend constexpr bool operator==(ZeroPattern a, ZeroPattern b) { return a.bits_ == b.bits_; }
  friend constexpr auto operator<=>(ZeroPattern a, ZeroPattern b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint16_t bits_ = 0;
};

/// All six permutations of {0,1,2} in lexicographic order.
const std::array<std::array<int, 3>, 6>& s3_elements();

using ExponentRow = std::array<int, 3>;

/// Exponent matrix of a ternary trinomial; row i holds the exponents of
/// (x, y, z) in the i-th term. Every row sums to the degree.
class PowerMatrix {
 public:
  PowerMatrix() = default;
  explicit PowerMatrix(const std::array<ExponentRow, 3>& rows);

  int degree() const { return degree_; }
  const std::array<ExponentRow, 3>& rows() const { return rows_; }
  const ExponentRow& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }
  int at(int i, int j) const { return row(i).at(static_cast<std::size_t>(j)); }

  ZeroPattern pattern() const;
  IntMatrix to_int_matrix() const;
  /// Simultaneous relabelling of variables: new column j is old column c[j].
  PowerMatrix with_columns(const std::array<int, 3>& c) const;
  PowerMatrix with_rows(const std::array<int, 3>& r) const;

  friend bool operator==(const PowerMatrix& a, const PowerMatrix& b) { return a.rows_ == b.rows_; }

 private:
  std::array<ExponentRow, 3> rows_{};
  int degree_ = 0;
};

BigInt determinant(const PowerMatrix& p);

enum class CurveType { Fermat, SmallJordan, Block, BigJordan, Klein };

inline constexpr std::array<CurveType, 5> kAllCurveTypes = {
    CurveType::Fermat, CurveType::SmallJordan, CurveType::Block, CurveType::BigJordan, CurveType::Klein};

std::string_view type_name(CurveType t);          // "small_jordan"
std::string_view type_display_name(CurveType t);  // "Small Jordan"
std::optional<CurveType> parse_type(std::string_view name);

/// A_1 m_1 + A_2 m_2 + A_3 m_3 with m_i = x^p_i1 y^p_i2 z^p_i3 and A_i != 0.
class TrinomialCurve {
 public:
  TrinomialCurve(PowerMatrix p, std::array<BigRational, 3> coeffs, std::optional<CurveType> type = std::nullopt);
  explicit TrinomialCurve(PowerMatrix p, std::optional<CurveType> type = std::nullopt);

  int degree() const { return p_.degree(); }
  const PowerMatrix& power_matrix() const { return p_; }
  const std::array<BigRational, 3>& coefficients() const { return a_; }
  const std::optional<CurveType>& type() const { return type_; }

  /// F(x, y, z); like terms (equal rows) are combined.
  MultiPoly polynomial() const;
  std::string equation() const;

 private:
  PowerMatrix p_;
  std::array<BigRational, 3> a_;
  std::optional<CurveType> type_;
};

/// Canonical smooth representative with A = (1,1,1). Small Jordan uses the
/// form x^d + y^d + y z^(d-1); Big Jordan uses x^d + x y^(d-1) + y z^(d-1).
/// Throws std::invalid_argument("degree below cubic") for d < 3.
TrinomialCurve canonical_curve(CurveType type, int d);
PowerMatrix canonical_matrix(CurveType type, int d);

/// Closed forms d^3, d^2(d-1), d^2(d-2), d(d-1)^2, d(d^2-3d+3).
BigInt determinant_formula(CurveType type, int d);

/// Greatest monomial dividing all three terms; nullopt when it is 1, which
/// happens exactly when every column of the pattern contains a zero.
std::optional<ExponentRow> common_monomial_factor(const TrinomialCurve& c);

}  // namespace trinomia
