#include "trinomia/resultant.hpp"

#include <stdexcept>

namespace trinomia {

namespace {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Coefficient rows are written highest degree first.
template <class T>
Matrix<T> sylvester(const std::vector<T>& f_desc, const std::vector<T>& g_desc, const T& zero) {
  const std::size_t m = f_desc.size() - 1;
  const std::size_t n = g_desc.size() - 1;
  const std::size_t size = m + n;
  Matrix<T> s(size, std::vector<T>(size, zero));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = f_desc[k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = g_desc[k];
  }
  return s;
}

MultiPoly bareiss_determinant(Matrix<MultiPoly> a, int arity) {
  const std::size_t n = a.size();
  if (n == 0) return MultiPoly(arity, 1);
  bool negate = false;
  MultiPoly prev(arity, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MultiPoly(arity);
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = num.divide_exact(prev);
      }
      a[i][k] = MultiPoly(arity);
    }
    prev = a[k][k];
  }
  MultiPoly det = a[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  if (f.arity() != g.arity()) throw std::invalid_argument("resultant: arity mismatch");
  const int m = f.degree_in(var);
  const int n = g.degree_in(var);
  if (m == 0 && n == 0) throw std::invalid_argument("nothing to eliminate");
  if (m == 0) return f.pow(static_cast<unsigned>(n));
  if (n == 0) return g.pow(static_cast<unsigned>(m));
  auto fc = f.coefficients_in(var);
  auto gc = g.coefficients_in(var);
  std::vector<MultiPoly> fd(fc.rbegin(), fc.rend());
  std::vector<MultiPoly> gd(gc.rbegin(), gc.rend());
  return bareiss_determinant(sylvester(fd, gd, MultiPoly(f.arity())), f.arity());
}

BigRational determinant(std::vector<std::vector<BigRational>> m) {
  const std::size_t n = m.size();
  BigRational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const BigRational factor = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return det;
}

BigRational resultant(const UPoly& f, const UPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0 && n == 0) throw std::invalid_argument("nothing to eliminate");
  std::vector<BigRational> fd(f.coeffs().rbegin(), f.coeffs().rend());
  std::vector<BigRational> gd(g.coeffs().rbegin(), g.coeffs().rend());
  return determinant(sylvester(fd, gd, BigRational(0)));
}

UPoly resultant_by_interpolation(const MultiPoly& f, const MultiPoly& g, int var, int keep) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  for (const auto* p : {&f, &g}) {
    for (const auto& [e, c] : p->terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0 && static_cast<int>(i) != var && static_cast<int>(i) != keep) {
          throw std::invalid_argument("resultant_by_interpolation: unexpected variable");
        }
      }
    }
  }
  const int m = f.degree_in(var);
  const int n = g.degree_in(var);
  if (m == 0 && n == 0) throw std::invalid_argument("nothing to eliminate");
  const auto fc = f.coefficients_in(var);
  const auto gc = g.coefficients_in(var);
  std::vector<UPoly> fu;
  std::vector<UPoly> gu;
  int fmax = 0;
  int gmax = 0;
  for (auto it = fc.rbegin(); it != fc.rend(); ++it) {
    fu.push_back(it->to_univariate(keep));
    fmax = std::max(fmax, fu.back().degree());
  }
  for (auto it = gc.rbegin(); it != gc.rend(); ++it) {
    gu.push_back(it->to_univariate(keep));
    gmax = std::max(gmax, gu.back().degree());
  }
  const int bound = n * fmax + m * gmax;
  std::vector<BigRational> xs;
  std::vector<BigRational> ys;
  for (int node = 0; node <= bound; ++node) {
    const BigRational x(node);
    std::vector<BigRational> fd;
    std::vector<BigRational> gd;
    for (const auto& c : fu) fd.push_back(c.eval(x));
    for (const auto& c : gu) gd.push_back(c.eval(x));
    xs.push_back(x);
    if (m == 0) {
      ys.push_back(rational_pow(fd[0], n));
    } else if (n == 0) {
      ys.push_back(rational_pow(gd[0], m));
    } else {
      ys.push_back(determinant(sylvester(fd, gd, BigRational(0))));
    }
  }
  return UPoly::interpolate(xs, ys);
}

MultiPoly discriminant(const MultiPoly& f, int var) {
  if (f.is_zero()) throw std::invalid_argument("discriminant of the zero polynomial");
  const int n = f.degree_in(var);
  if (n < 1) throw std::invalid_argument("discriminant needs positive degree");
  if (n == 1) return MultiPoly(f.arity(), 1);
  MultiPoly r = resultant(f, f.partial_derivative(var), var).divide_exact(f.lead_in(var));
  return ((n * (n - 1) / 2) % 2 == 1) ? -r : r;
}

UPoly discriminant(const UPoly& f) {
  return discriminant(MultiPoly::from_univariate(f, 1, 0), 0).to_univariate(0);
}

}  // namespace trinomia
