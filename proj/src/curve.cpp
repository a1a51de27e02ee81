#include "trinomia/curve.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace trinomia {

std::uint16_t ZeroPattern::row_major_code() const {
  std::uint16_t code = 0;
  for (int k = 0; k < 9; ++k) {
    code = static_cast<std::uint16_t>(code << 1U);
    if (star(k / 3, k % 3)) code |= 1U;
  }
  return code;
}

ZeroPattern ZeroPattern::from_row_major_code(std::uint16_t code) {
  std::uint16_t bits = 0;
  for (int k = 0; k < 9; ++k) {
    if (((code >> (8 - k)) & 1U) != 0) bits |= static_cast<std::uint16_t>(1U << k);
  }
  return ZeroPattern(bits);
}

ZeroPattern ZeroPattern::permuted(const std::array<int, 3>& r, const std::array<int, 3>& c) const {
  std::uint16_t bits = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (star(r[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)])) {
        bits |= static_cast<std::uint16_t>(1U << (3 * i + j));
      }
    }
  }
  return ZeroPattern(bits);
}

ZeroPattern ZeroPattern::canonical() const {
  std::uint16_t best = row_major_code();
  for (const auto& r : s3_elements()) {
    for (const auto& c : s3_elements()) best = std::min(best, permuted(r, c).row_major_code());
  }
  return from_row_major_code(best);
}

bool ZeroPattern::has_zero_row() const {
  for (int i = 0; i < 3; ++i) {
    if (!star(i, 0) && !star(i, 1) && !star(i, 2)) return true;
  }
  return false;
}

bool ZeroPattern::has_zero_column() const {
  for (int j = 0; j < 3; ++j) {
    if (!star(0, j) && !star(1, j) && !star(2, j)) return true;
  }
  return false;
}

bool ZeroPattern::has_full_row() const {
  for (int i = 0; i < 3; ++i) {
    if (star(i, 0) && star(i, 1) && star(i, 2)) return true;
  }
  return false;
}

bool ZeroPattern::has_full_column() const {
  for (int j = 0; j < 3; ++j) {
    if (star(0, j) && star(1, j) && star(2, j)) return true;
  }
  return false;
}

std::string ZeroPattern::to_string() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i == 0 ? "[" : ",[";
    for (int j = 0; j < 3; ++j) {
      if (j > 0) s += ',';
      s += star(i, j) ? '*' : '0';
    }
    s += ']';
  }
  return s + "]";
}

const std::array<std::array<int, 3>, 6>& s3_elements() {
  static const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
  }};
  return perms;
}

PowerMatrix::PowerMatrix(const std::array<ExponentRow, 3>& rows) : rows_(rows) {
  for (const auto& row : rows_) {
    for (int e : row) {
      if (e < 0) throw std::invalid_argument("negative exponent in power matrix");
    }
  }
  degree_ = rows_[0][0] + rows_[0][1] + rows_[0][2];
  for (const auto& row : rows_) {
    if (row[0] + row[1] + row[2] != degree_) throw std::invalid_argument("rows of the power matrix have different sums");
  }
}

ZeroPattern PowerMatrix::pattern() const {
  std::uint16_t bits = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (at(i, j) != 0) bits |= static_cast<std::uint16_t>(1U << (3 * i + j));
    }
  }
  return ZeroPattern(bits);
}

IntMatrix PowerMatrix::to_int_matrix() const {
  IntMatrix m(3, std::vector<BigInt>(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);
  }
  return m;
}

PowerMatrix PowerMatrix::with_columns(const std::array<int, 3>& c) const {
  std::array<ExponentRow, 3> out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, c[static_cast<std::size_t>(j)]);
  }
  return PowerMatrix(out);
}

PowerMatrix PowerMatrix::with_rows(const std::array<int, 3>& r) const {
  std::array<ExponentRow, 3> out{};
  for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(i)] = row(r[static_cast<std::size_t>(i)]);
  return PowerMatrix(out);
}

BigInt determinant(const PowerMatrix& p) { return int_determinant(p.to_int_matrix()); }

std::string_view type_name(CurveType t) {
  switch (t) {
    case CurveType::Fermat: return "fermat";
    case CurveType::SmallJordan: return "small_jordan";
    case CurveType::Block: return "block";
    case CurveType::BigJordan: return "big_jordan";
    case CurveType::Klein: return "klein";
  }
  return "?";
}

std::string_view type_display_name(CurveType t) {
  switch (t) {
    case CurveType::Fermat: return "Fermat";
    case CurveType::SmallJordan: return "Small Jordan";
    case CurveType::Block: return "Block";
    case CurveType::BigJordan: return "Big Jordan";
    case CurveType::Klein: return "Klein";
  }
  return "?";
}

std::optional<CurveType> parse_type(std::string_view name) {
  std::string key;
  for (char ch : name) {
    if (ch == '-' || ch == ' ') ch = '_';
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  for (CurveType t : kAllCurveTypes) {
    if (key == type_name(t)) return t;
  }
  if (key == "smalljordan") return CurveType::SmallJordan;
  if (key == "bigjordan") return CurveType::BigJordan;
  return std::nullopt;
}

TrinomialCurve::TrinomialCurve(PowerMatrix p, std::array<BigRational, 3> coeffs, std::optional<CurveType> type)
    : p_(std::move(p)), a_(std::move(coeffs)), type_(type) {
  for (const auto& a : a_) {
    if (a == 0) throw std::invalid_argument("trinomial coefficient is zero");
  }
}

TrinomialCurve::TrinomialCurve(PowerMatrix p, std::optional<CurveType> type)
    : TrinomialCurve(std::move(p), {BigRational(1), BigRational(1), BigRational(1)}, type) {}

MultiPoly TrinomialCurve::polynomial() const {
  MultiPoly f(3);
  for (int i = 0; i < 3; ++i) {
    const auto& r = p_.row(i);
    f += MultiPoly::monomial({r[0], r[1], r[2]}, a_[static_cast<std::size_t>(i)]);
  }
  return f;
}

std::string TrinomialCurve::equation() const { return polynomial().to_string(); }

PowerMatrix canonical_matrix(CurveType type, int d) {
  if (d < 3) throw std::invalid_argument("degree below cubic");
  switch (type) {
    case CurveType::Fermat: return PowerMatrix({{{d, 0, 0}, {0, d, 0}, {0, 0, d}}});
    case CurveType::SmallJordan: return PowerMatrix({{{d, 0, 0}, {0, d, 0}, {0, 1, d - 1}}});
    case CurveType::Block: return PowerMatrix({{{d, 0, 0}, {0, d - 1, 1}, {0, 1, d - 1}}});
    case CurveType::BigJordan: return PowerMatrix({{{d, 0, 0}, {1, d - 1, 0}, {0, 1, d - 1}}});
    case CurveType::Klein: return PowerMatrix({{{1, d - 1, 0}, {0, 1, d - 1}, {d - 1, 0, 1}}});
  }
  throw std::invalid_argument("unknown curve type");
}

TrinomialCurve canonical_curve(CurveType type, int d) { return TrinomialCurve(canonical_matrix(type, d), type); }

BigInt determinant_formula(CurveType type, int d) {
  const BigInt D = d;
  switch (type) {
    case CurveType::Fermat: return D * D * D;
    case CurveType::SmallJordan: return D * D * (D - 1);
    case CurveType::Block: return D * D * (D - 2);
    case CurveType::BigJordan: return D * (D - 1) * (D - 1);
    case CurveType::Klein: return D * (D * D - 3 * D + 3);
  }
  throw std::invalid_argument("unknown curve type");
}

std::optional<ExponentRow> common_monomial_factor(const TrinomialCurve& c) {
  ExponentRow m{};
  bool trivial = true;
  for (int j = 0; j < 3; ++j) {
    const auto& p = c.power_matrix();
    m[static_cast<std::size_t>(j)] = std::min({p.at(0, j), p.at(1, j), p.at(2, j)});
    if (m[static_cast<std::size_t>(j)] != 0) trivial = false;
  }
  if (trivial) return std::nullopt;
  return m;
}

}  // namespace trinomia
