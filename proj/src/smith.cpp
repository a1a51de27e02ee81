#include "trinomia/smith.hpp"

#include <stdexcept>

#include "trinomia/resultant.hpp"

namespace trinomia {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  if (a.front().size() != b.size()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(a.size(), std::vector<BigInt>(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b.front().size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

BigInt int_determinant(const IntMatrix& m) {
  std::vector<std::vector<BigRational>> q;
  for (const auto& row : m) q.emplace_back(row.begin(), row.end());
  const BigRational d = determinant(std::move(q));
  return d.get_num();
}

namespace {

struct Reducer {
  IntMatrix a;
  IntMatrix left;
  IntMatrix right;
  std::size_t rows;
  std::size_t cols;

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(left[i], left[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : right) std::swap(row[i], row[j]);
  }
  // row_i -= q * row_k
  void row_axpy(std::size_t i, std::size_t k, const BigInt& q) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[k][j];
    for (std::size_t j = 0; j < rows; ++j) left[i][j] -= q * left[k][j];
  }
  // col_j -= q * col_k
  void col_axpy(std::size_t j, std::size_t k, const BigInt& q) {
    for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][k];
    for (std::size_t i = 0; i < cols; ++i) right[i][j] -= q * right[i][k];
  }
  void negate_row(std::size_t i) {
    for (auto& v : a[i]) v = -v;
    for (auto& v : left[i]) v = -v;
  }

  bool pivot_smallest(std::size_t t) {
    bool found = false;
    std::size_t bi = t;
    std::size_t bj = t;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        if (!found || abs(a[i][j]) < abs(a[bi][bj])) {
          found = true;
          bi = i;
          bj = j;
        }
      }
    }
    if (!found) return false;
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
    return true;
  }

  void reduce_at(std::size_t t) {
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        row_axpy(i, t, q);
        if (a[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        col_axpy(j, t, q);
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) {
        pivot_smallest(t);
        continue;
      }
      // divisibility of the remaining block by the pivot
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
        for (std::size_t j = t + 1; j < cols && !fixed; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            row_axpy(t, i, BigInt(-1));  // row_t += row_i
            fixed = true;
          }
        }
      }
      if (!fixed) break;
    }
    if (a[t][t] < 0) negate_row(t);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  }
  Reducer r{m, identity_matrix(rows), identity_matrix(cols), rows, cols};
  const std::size_t steps = std::min(rows, cols);
  std::vector<BigInt> factors(steps, 0);
  for (std::size_t t = 0; t < steps; ++t) {
    if (!r.pivot_smallest(t)) break;
    r.reduce_at(t);
  }
  for (std::size_t t = 0; t < steps; ++t) factors[t] = r.a[t][t];
  return {factors, r.left, r.right};
}

}  // namespace trinomia
