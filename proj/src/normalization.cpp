#include "trinomia/normalization.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace trinomia {

IntMatrix adjugate(const PowerMatrix& p) {
  IntMatrix q(3, std::vector<BigInt>(3));
  auto m = [&](int i, int j) { return BigInt(p.at(i % 3, j % 3)); };
  // cyclic index trick: cofactor C_ij = m(i+1,j+1) m(i+2,j+2) - m(i+1,j+2) m(i+2,j+1)
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const BigInt c = m(i + 1, j + 1) * m(i + 2, j + 2) - m(i + 1, j + 2) * m(i + 2, j + 1);
      q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c;
    }
  }
  return q;
}

bool verify_witness(const NormalizationWitness& w, const PowerMatrix& p, const std::array<BigRational, 3>& a) {
  const IntMatrix pm = p.to_int_matrix();
  IntMatrix scaled = identity_matrix(3);
  for (std::size_t i = 0; i < 3; ++i) scaled[i][i] = w.delta;
  if (multiply(w.q, pm) != scaled || multiply(pm, w.q) != scaled) return false;
  for (int i = 0; i < 3; ++i) {
    BigRational lhs = 1;
    for (int j = 0; j < 3; ++j) lhs *= rational_pow(w.b[static_cast<std::size_t>(j)], p.at(i, j));
    if (lhs != rational_pow(a[static_cast<std::size_t>(i)], -w.delta.get_si())) return false;
  }
  return true;
}

NormalizationWitness normalize(const PowerMatrix& p, const std::array<BigRational, 3>& a) {
  for (const auto& v : a) {
    if (v == 0) throw std::invalid_argument("coefficient is zero");
  }
  NormalizationWitness w;
  w.delta = determinant(p);
  if (w.delta == 0) throw std::invalid_argument("degenerate power matrix");
  w.q = adjugate(p);
  for (std::size_t k = 0; k < 3; ++k) {
    BigRational bk = 1;
    for (std::size_t i = 0; i < 3; ++i) bk *= rational_pow(a[i], -w.q[k][i].get_si());
    w.b[k] = bk;
  }
  if (!verify_witness(w, p, a)) throw std::logic_error("normalization identity failed");
  return w;
}

double numeric_scaling_check(const NormalizationWitness& w, const PowerMatrix& p, const std::array<BigRational, 3>& a) {
  using std::numbers::pi;
  const double delta = w.delta.get_d();
  auto arg_of = [](const BigRational& q) { return q < 0 ? pi : 0.0; };
  std::array<std::complex<double>, 3> log_lambda{};
  for (std::size_t k = 0; k < 3; ++k) {
    log_lambda[k] = std::complex<double>(log_abs(w.b[k]), arg_of(w.b[k])) / delta;
  }
  double worst = 0;
  for (int i = 0; i < 3; ++i) {
    const auto& ai = a[static_cast<std::size_t>(i)];
    std::complex<double> lg(log_abs(ai), arg_of(ai));
    for (int k = 0; k < 3; ++k) lg += static_cast<double>(p.at(i, k)) * log_lambda[static_cast<std::size_t>(k)];
    const std::complex<double> value = std::exp(lg);
    const double step = 2 * pi / std::abs(delta);
    const double angle = std::round(std::arg(value) / step) * step;
    worst = std::max(worst, std::abs(value - std::polar(1.0, angle)));
  }
  return worst;
}

}  // namespace trinomia
