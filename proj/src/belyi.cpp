#include "trinomia/belyi.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "trinomia/resultant.hpp"
#include "trinomia/roots.hpp"

namespace trinomia {

namespace {

std::string monomial_text(const ExponentRow& e) {
  static const char* names[] = {"x", "y", "z"};
  std::string out;
  for (int j = 0; j < 3; ++j) {
    if (e[static_cast<std::size_t>(j)] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[j];
    if (e[static_cast<std::size_t>(j)] > 1) out += "^" + std::to_string(e[static_cast<std::size_t>(j)]);
  }
  return out.empty() ? "1" : out;
}

MultiPoly monomial_poly(const ExponentRow& e) { return MultiPoly::monomial({e[0], e[1], e[2]}); }

std::array<int, 3> delta_of(const BelyiCandidate& b) {
  return {b.numerator[0] - b.denominator[0], b.numerator[1] - b.denominator[1],
          b.numerator[2] - b.denominator[2]};
}

// ---- truncated power series in one variable ----
using Series = std::vector<BigRational>;

Series smul(const Series& a, const Series& b, std::size_t prec) {
  Series out(prec, 0);
  for (std::size_t i = 0; i < a.size() && i < prec; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < prec; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series spow(const Series& a, int e, std::size_t prec) {
  Series out(prec, 0);
  out[0] = 1;
  for (int i = 0; i < e; ++i) out = smul(out, a, prec);
  return out;
}

Series sinv(const Series& a, std::size_t prec) {
  Series out(prec, 0);
  out[0] = 1 / a.at(0);
  for (std::size_t n = 1; n < prec; ++n) {
    BigRational acc = 0;
    for (std::size_t i = 1; i <= n && i < a.size(); ++i) acc += a[i] * out[n - i];
    out[n] = -acc * out[0];
  }
  return out;
}

// Points of the curve sharing one local behaviour. Finite families carry
// their values as the roots of `values`, each root hit by points_per_value
// points; infinite families sit over t = infinity.
struct Family {
  bool infinite = false;
  UPoly values;
  int points_per_value = 1;
  int e = 1;
  std::string origin;
  long point_count() const { return infinite ? points_per_value : static_cast<long>(values.degree()) * points_per_value; }
};

struct Analysis {
  std::vector<Family> families;
  int degree = 0;
  std::vector<std::string> log;
};

Family single(bool infinite, const BigRational& v, int e, std::string origin) {
  Family f;
  f.infinite = infinite;
  if (!infinite) f.values = UPoly::linear_root(v);
  f.points_per_value = 1;
  f.e = e;
  f.origin = std::move(origin);
  return f;
}

Analysis analyse(const BelyiCandidate& b) {
  const auto& P = b.curve.power_matrix();
  const auto& A = b.curve.coefficients();
  const int d = P.degree();
  const auto delta = delta_of(b);
  if (delta == std::array<int, 3>{0, 0, 0}) throw std::invalid_argument("candidate is constant on the curve");
  if (determinant(P) == 0) throw std::invalid_argument("Belyi analysis needs det P != 0");
  for (int s = 0; s < 3; ++s)
    for (int t = s + 1; t < 3; ++t)
      if (P.row(s) == P.row(t)) throw std::invalid_argument("power matrix has equal rows");

  Analysis out;
  const int k = b.function_degree();
  auto emit = [&](int ord, const std::string& origin, int count) {
    // ord = order of N/D at each of `count` points
    for (int i = 0; i < count; ++i) {
      if (ord > 0) out.families.push_back(single(false, b.shift, ord, origin));
      if (ord < 0) out.families.push_back(single(true, 0, -ord, origin));
    }
  };

  // multiplicity of vertex `v` on the line x_a = 0 (b the remaining index)
  auto vertex_mult = [&](int a, int other) {
    int best = -1;
    for (int t = 0; t < 3; ++t) {
      if (P.at(t, a) != 0) continue;
      const int m = P.at(t, other);
      if (best < 0 || m < best) best = m;
    }
    if (best < 0) throw std::invalid_argument("a coordinate line divides the curve");
    return best;
  };

  // vertices
  for (int v = 0; v < 3; ++v) {
    bool on_curve = true;
    for (int t = 0; t < 3; ++t)
      if (P.at(t, v) == d) on_curve = false;
    if (!on_curve) continue;
    const int a = (v + 1) % 3;
    const int c = (v + 2) % 3;
    const int va = vertex_mult(a, c);  // v_P(x_a)
    const int vc = vertex_mult(c, a);
    if (va != 1 && vc != 1) throw std::invalid_argument("curve is singular at a vertex");
    const int ord = delta[static_cast<std::size_t>(a)] * va + delta[static_cast<std::size_t>(c)] * vc;
    const std::string origin = "vertex " + std::to_string(v);
    if (ord != 0) {
      emit(ord, origin, 1);
      continue;
    }
    // ord 0: a coordinate whose line is transversal is a local parameter;
    // expand the other one as a series in it
    const int par = (va == 1) ? a : c;
    const int w = (par == a) ? c : a;
    const int s = (par == a) ? vc : va;  // order of x_w in the parameter
    const std::size_t prec_q = static_cast<std::size_t>(d * k + 2);
    const std::size_t prec = prec_q + static_cast<std::size_t>(s);
    BigRational gw0 = 0;
    for (int t = 0; t < 3; ++t)
      if (P.at(t, par) == 0 && P.at(t, w) == 1) gw0 += A[static_cast<std::size_t>(t)];
    if (gw0 == 0) throw std::logic_error("branch is not a graph over the chosen parameter");
    Series ws(prec, 0);
    for (std::size_t it = 0; it <= prec; ++it) {
      Series g(prec, 0);
      for (int t = 0; t < 3; ++t) {
        const Series wp = spow(ws, P.at(t, w), prec);
        const auto shift = static_cast<std::size_t>(P.at(t, par));
        for (std::size_t i = 0; i + shift < prec; ++i) g[i + shift] += A[static_cast<std::size_t>(t)] * wp[i];
      }
      for (std::size_t i = 0; i < prec; ++i) ws[i] -= g[i] / gw0;
    }
    for (int i = 0; i < s; ++i)
      if (ws[static_cast<std::size_t>(i)] != 0) throw std::logic_error("branch order disagrees with line multiplicity");
    Series q(ws.begin() + s, ws.end());
    const int dw = delta[static_cast<std::size_t>(w)];
    const Series h = dw >= 0 ? spow(q, dw, prec_q) : spow(sinv(q, prec_q), -dw, prec_q);
    int e = 0;
    for (std::size_t i = 1; i < prec_q; ++i) {
      if (h[i] != 0) {
        e = static_cast<int>(i);
        break;
      }
    }
    if (e == 0) throw std::logic_error("series precision exhausted at a vertex");
    out.families.push_back(single(false, h[0] + b.shift, e, origin + " (series)"));
  }

  // non-vertex points on the coordinate lines
  for (int i = 0; i < 3; ++i) {
    std::vector<int> s0;
    for (int t = 0; t < 3; ++t)
      if (P.at(t, i) == 0) s0.push_back(t);
    if (s0.empty()) throw std::invalid_argument("a coordinate line divides the curve");
    if (s0.size() == 3) throw std::invalid_argument("variable absent from the curve");
    if (s0.size() == 1) continue;
    const int a = (i + 1) % 3;  // X = x_a / x_(i+2)
    int t1 = s0[0];
    int t2 = s0[1];
    if (P.at(t1, a) < P.at(t2, a)) std::swap(t1, t2);
    const int m = P.at(t1, a) - P.at(t2, a);
    const BigRational rho = -A[static_cast<std::size_t>(t2)] / A[static_cast<std::size_t>(t1)];
    const std::string origin = "line x" + std::to_string(i) + "=0";
    const int di = delta[static_cast<std::size_t>(i)];
    if (di != 0) {
      emit(di, origin, m);
      continue;
    }
    const int t3 = 3 - t1 - t2;
    const int da = delta[static_cast<std::size_t>(a)];  // (x_a / x_c)^da, da != 0 here
    const int g = std::gcd(m, std::abs(da));
    Family f;
    f.values = UPoly::linear_root(b.shift).pow(static_cast<unsigned>(m / g)) - UPoly(rational_pow(rho, da / g));
    f.points_per_value = g;
    f.e = P.at(t3, i);
    f.origin = origin;
    out.families.push_back(f);
  }

  // torus: x^delta restricted to the curve is critical where A_t m_t is
  // proportional to kappa_t
  std::array<BigInt, 3> w{};
  for (int t = 0; t < 3; ++t) {
    IntMatrix m = {{delta[0], delta[1], delta[2]}, {P.at(t, 0), P.at(t, 1), P.at(t, 2)}, {1, 1, 1}};
    w[static_cast<std::size_t>(t)] = int_determinant(m);
  }
  const std::array<BigInt, 3> kappa = {w[1] - w[2], w[2] - w[0], w[0] - w[1]};
  if (kappa[0] != 0 && kappa[1] != 0 && kappa[2] != 0) {
    std::array<BigRational, 3> r{};  // m_t / m_0 at the critical points
    for (int t = 1; t < 3; ++t)
      r[static_cast<std::size_t>(t)] = BigRational(kappa[static_cast<std::size_t>(t)]) * A[0] /
                                       (BigRational(kappa[0]) * A[static_cast<std::size_t>(t)]);
    // delta = k1 e1 + k2 e2 with e_t = p_t - p_0
    std::array<std::array<int, 3>, 3> e{};
    for (int t = 1; t < 3; ++t)
      for (int j = 0; j < 3; ++j) e[t][static_cast<std::size_t>(j)] = P.at(t, j) - P.at(0, j);
    BigRational k1;
    BigRational k2;
    bool solved = false;
    for (int p = 0; p < 3 && !solved; ++p) {
      for (int q = p + 1; q < 3 && !solved; ++q) {
        const BigInt minor = BigInt(e[1][p]) * e[2][q] - BigInt(e[1][q]) * e[2][p];
        if (minor == 0) continue;
        k1 = BigRational(BigInt(delta[p]) * e[2][q] - BigInt(delta[q]) * e[2][p]) / BigRational(minor);
        k2 = BigRational(BigInt(e[1][p]) * delta[q] - BigInt(e[1][q]) * delta[p]) / BigRational(minor);
        solved = true;
      }
    }
    if (!solved) throw std::logic_error("difference vectors are dependent");
    BigInt L;
    mpz_lcm(L.get_mpz_t(), k1.get_den().get_mpz_t(), k2.get_den().get_mpz_t());
    const BigRational l1 = k1 * L;
    const BigRational l2 = k2 * L;
    const BigRational R = rational_pow(r[1], l1.get_num().get_si()) * rational_pow(r[2], l2.get_num().get_si());
    const BigInt total = abs(determinant(P)) / d;
    if (total % L != 0) throw std::logic_error("torus orbit does not split evenly over values");
    Family f;
    f.values = UPoly::linear_root(b.shift).pow(static_cast<unsigned>(L.get_ui())) - UPoly(R);
    f.points_per_value = static_cast<int>(BigInt(total / L).get_si());
    f.e = 2;
    f.origin = "torus";
    out.families.push_back(f);
    out.log.push_back("torus critical points: " + to_string(total) + " points, (t - c)^" + to_string(L) +
                      " = " + to_string(R));
  }

  for (const auto& f : out.families)
    if (f.infinite) out.degree += f.points_per_value * f.e;
  return out;
}

// ---- algebraic route: resultants after a generic linear change ----

struct Raw {
  UPoly r;
  int inf = 0;
};

class Projection {
 public:
  Projection(const BelyiCandidate& b, const IntMatrix& m) : shift_(b.shift), k_(b.function_degree()) {
    std::vector<MultiPoly> images;
    for (int i = 0; i < 3; ++i) {
      MultiPoly lin(3);
      for (int j = 0; j < 3; ++j) lin += MultiPoly::variable(3, j) * BigRational(m[i][j]);
      images.push_back(lin);
    }
    auto chart = [&](const MultiPoly& p) { return p.substitute(images).specialize(2, 1); };
    f_ = chart(b.curve.polynomial());
    n_ = chart(monomial_poly(b.numerator));
    den_ = chart(monomial_poly(b.denominator));
    d_ = b.curve.degree();
    if (f_.degree_in(1) != d_) throw std::invalid_argument("projection centre lies on the curve");
  }

  // nullopt when the pencil member passes through the projection centre
  std::optional<Raw> raw(const std::optional<BigRational>& t) const {
    const MultiPoly g = t ? n_ - den_ * BigRational(*t - shift_) : den_;
    if (g.degree_in(1) != k_) return std::nullopt;
    Raw out;
    out.r = resultant_by_interpolation(f_, g, 1, 0);
    if (out.r.is_zero()) throw std::logic_error("pencil member contains the curve");
    out.inf = d_ * k_ - out.r.degree();
    return out;
  }

  void compute_base(const BigRational& anchor) {
    std::vector<Raw> samples;
    for (long off : {10007L, -7919L, 104729L, 130003L, -65537L}) {
      auto r = raw(anchor + off);
      if (r) samples.push_back(*r);
      if (samples.size() == 3) break;
    }
    if (samples.size() < 3) throw std::logic_error("no generic pencil members found");
    base_ = samples[0].r;
    base_inf_ = samples[0].inf;
    for (std::size_t i = 1; i < samples.size(); ++i) {
      base_ = gcd(base_, samples[i].r);
      base_inf_ = std::min(base_inf_, samples[i].inf);
    }
    degree_ = d_ * k_ - base_.degree() - base_inf_;
  }

  int degree() const { return degree_; }
  int base_degree() const { return base_.degree() + base_inf_; }

  std::optional<std::vector<int>> profile(const std::optional<BigRational>& t) const {
    auto r = raw(t);
    if (!r) return std::nullopt;
    const UPoly q = r->r.divide_exact(base_);
    std::vector<int> prof;
    const auto parts = squarefree_decomposition(q);
    for (std::size_t j = 0; j < parts.size(); ++j)
      for (int c = 0; c < parts[j].degree(); ++c) prof.push_back(static_cast<int>(j) + 1);
    if (r->inf - base_inf_ > 0) prof.push_back(r->inf - base_inf_);
    std::sort(prof.rbegin(), prof.rend());
    return prof;
  }

 private:
  BigRational shift_;
  int k_;
  int d_ = 0;
  MultiPoly f_{3};
  MultiPoly n_{3};
  MultiPoly den_{3};
  UPoly base_;
  int base_inf_ = 0;
  int degree_ = 0;
};

class AlgebraicRoute {
 public:
  explicit AlgebraicRoute(const BelyiCandidate& b) {
    std::mt19937 rng(0x7e11u);
    std::uniform_int_distribution<int> dist(-25, 25);
    const MultiPoly F = b.curve.polynomial();
    const MultiPoly N = monomial_poly(b.numerator);
    const MultiPoly D = monomial_poly(b.denominator);
    while (engines_.size() < 3) {
      IntMatrix m(3, std::vector<BigInt>(3));
      for (auto& row : m)
        for (auto& v : row) v = dist(rng);
      if (int_determinant(m) == 0) continue;
      const std::vector<BigRational> centre = {BigRational(m[0][1]), BigRational(m[1][1]), BigRational(m[2][1])};
      if (F.evaluate(centre) == 0 || N.evaluate(centre) == 0 || D.evaluate(centre) == 0) continue;
      engines_.emplace_back(b, m);
      engines_.back().compute_base(b.shift);
    }
    for (const auto& e : engines_)
      if (e.degree() != engines_[0].degree()) throw std::logic_error("projections disagree on the degree");
  }

  int degree() const { return engines_[0].degree(); }
  int base_degree() const { return engines_[0].base_degree(); }

  // Projection can only merge points (two fiber points on a line through the
  // centre), so the finest answer wins.
  std::vector<int> profile(const std::optional<BigRational>& t) const {
    std::vector<std::vector<int>> got;
    for (const auto& e : engines_)
      if (auto p = e.profile(t)) got.push_back(*p);
    if (got.empty()) throw std::logic_error("every projection degenerates at this value");
    std::stable_sort(got.begin(), got.end(), [](const auto& x, const auto& y) { return x.size() > y.size(); });
    for (std::size_t i = 1; i < got.size(); ++i)
      if (got[i].size() == got[0].size() && got[i] != got[0]) throw std::logic_error("projections disagree on a fiber");
    return got[0];
  }

 private:
  std::vector<Projection> engines_;
};

// K with K^m = h, h of positive degree in `var` with a constant leading
// coefficient there; nullopt if h is not an m-th power.
std::optional<MultiPoly> exact_root(const MultiPoly& h, unsigned m, int var) {
  const int n = h.degree_in(var);
  if (n <= 0 || n % static_cast<int>(m) != 0) return std::nullopt;
  const MultiPoly lead = h.lead_in(var);
  if (!lead.is_constant()) return std::nullopt;
  const MultiPoly monic = h * (1 / lead.constant_term());
  const int a = n / static_cast<int>(m);
  Exponents top(static_cast<std::size_t>(h.arity()), 0);
  top[static_cast<std::size_t>(var)] = a;
  MultiPoly k = MultiPoly::monomial(top);
  for (int j = 1; j <= a; ++j) {
    const MultiPoly rest = monic - k.pow(m);
    if (rest.is_zero()) break;
    const auto coeffs = rest.coefficients_in(var);
    const int want = n - j;
    if (static_cast<int>(coeffs.size()) > want + 1) return std::nullopt;
    if (static_cast<int>(coeffs.size()) <= want) continue;
    Exponents e(static_cast<std::size_t>(h.arity()), 0);
    e[static_cast<std::size_t>(var)] = a - j;
    k += coeffs[static_cast<std::size_t>(want)] * MultiPoly::monomial(e) * BigRational(1, m);
  }
  if (!(k.pow(m) == monic)) return std::nullopt;
  return k;
}

std::string profile_text(const std::vector<int>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

std::string moebius_text(const std::vector<BigRational>& finite, bool inf) {
  if (inf && finite.size() == 2) {
    const BigRational& a = finite[0];
    const BigRational& c = finite[1];
    if (a == 0 && c == 1) return "identity";
    if (a == -1 && c == 0) return "t -> -t";
    if (a == 0 && c == -1) return "t -> -t";
    return "t -> (t - " + to_string(a) + ")/(" + to_string(c - a) + ")";
  }
  if (!inf && finite.size() == 3)
    return "t -> (t - " + to_string(finite[0]) + ")(" + to_string(finite[1] - finite[2]) + ")/((t - " +
           to_string(finite[2]) + ")(" + to_string(finite[1] - finite[0]) + "))";
  if (inf && finite.size() == 1) return "t -> t - " + to_string(finite[0]);
  return "none";
}

}  // namespace

int BelyiCandidate::function_degree() const { return numerator[0] + numerator[1] + numerator[2]; }

std::string BelyiCandidate::to_string() const {
  std::string s = monomial_text(numerator);
  const std::string den = monomial_text(denominator);
  if (den != "1") s = "(" + s + ")/(" + den + ")";
  if (shift != 0) s += (shift > 0 ? " + " : " - ") + trinomia::to_string(BigRational(abs(shift)));
  return s;
}

BelyiTableRow belyi_table_row(CurveType type, int d) {
  if (d < 3) throw std::invalid_argument("degree below cubic");
  const BigInt D = d;
  auto make = [&](std::array<ExponentRow, 3> rows, ExponentRow num, ExponentRow den, long shift, std::string f,
                  BigInt deg) {
    TrinomialCurve c(PowerMatrix(rows), type);
    return BelyiTableRow{type, c, BelyiCandidate{c, num, den, BigRational(shift)}, std::move(f), std::move(deg)};
  };
  switch (type) {
    case CurveType::Fermat:
      return make({{{d, 0, 0}, {0, d, 0}, {0, 0, d}}}, {d, 0, 0}, {0, 0, d}, 0, "d^2", D * D);
    case CurveType::SmallJordan:
      return make({{{d, 0, 0}, {0, d, 0}, {0, 1, d - 1}}}, {0, d - 1, 0}, {0, 0, d - 1}, 1, "d(d-1)", D * (D - 1));
    case CurveType::Block:
      return make({{{d, 0, 0}, {0, d - 1, 1}, {0, 1, d - 1}}}, {0, d - 2, 0}, {0, 0, d - 2}, 1, "d(d-2)",
                  D * (D - 2));
    case CurveType::BigJordan:
      return make({{{d, 0, 0}, {0, d - 1, 1}, {1, 0, d - 1}}}, {d - 1, 0, 0}, {0, 0, d - 1}, 1, "(d-1)^2",
                  (D - 1) * (D - 1));
    case CurveType::Klein:
      return make({{{d - 1, 1, 0}, {0, d - 1, 1}, {1, 0, d - 1}}}, {d - 1, 0, 0}, {0, d - 2, 1}, 0, "d^2-d",
                  D * D - D);
  }
  throw std::invalid_argument("unknown curve type");
}

BelyiCandidate table_candidate(CurveType type, int d) {
  const BelyiTableRow row = belyi_table_row(type, d);
  const TrinomialCurve canon = canonical_curve(type, d);
  const MonomialEquivalence eq = monomial_equivalent(row.table_curve, canon);
  if (!eq.equivalent) throw std::logic_error("table curve is not a relabelling of the canonical curve");
  BelyiCandidate out{canon, {}, {}, row.table_function.shift};
  for (int j = 0; j < 3; ++j) {
    const auto src = static_cast<std::size_t>(eq.columns[static_cast<std::size_t>(j)]);
    out.numerator[static_cast<std::size_t>(j)] = row.table_function.numerator[src];
    out.denominator[static_cast<std::size_t>(j)] = row.table_function.denominator[src];
  }
  return out;
}

FiberPolynomial fiber_polynomial(const BelyiCandidate& b) {
  if (delta_of(b) == std::array<int, 3>{0, 0, 0}) throw std::invalid_argument("candidate is constant on the curve");
  // variables (x, y, t); z set to 1
  const MultiPoly F = b.curve.polynomial().specialize(2, 1);
  const MultiPoly t = MultiPoly::variable(3, 2);
  const MultiPoly N = monomial_poly(b.numerator).specialize(2, 1);
  const MultiPoly D = monomial_poly(b.denominator).specialize(2, 1);
  const MultiPoly G = N - D * (t - MultiPoly(3, b.shift));
  FiberPolynomial out{resultant(F, G, 0), {}};
  if (out.h.degree_in(2) <= 0) throw std::invalid_argument("candidate is constant on the curve");

  auto strip = [&](int var, int other, const char* label) {
    UPoly c;
    for (const auto& coef : out.h.coefficients_in(other)) {
      if (coef.is_zero()) continue;
      c = gcd(c, coef.to_univariate(var));
    }
    if (c.degree() >= 1) {
      out.h = out.h.divide_exact(MultiPoly::from_univariate(c, 3, var));
      out.removed.push_back(std::string("divided out ") + label + " factor " + c.to_string(label));
    }
  };
  strip(2, 1, "t");
  strip(1, 2, "y");

  // H = K^m happens when N - (t - c) D misses one chart variable; the
  // multiplicities of a generic specialization give the candidate m
  const UPoly generic = out.h.specialize(2, 10007).to_univariate(1);
  const auto parts = squarefree_decomposition(generic);
  unsigned m = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].degree() < 1) continue;
    m = std::gcd(m, static_cast<unsigned>(j + 1));
  }
  if (m > 1) {
    if (auto k = exact_root(out.h, m, 1)) {
      out.h = *k;
      out.removed.push_back("took the exact root of order " + std::to_string(m));
    }
  }
  return out;
}

std::vector<BigRational> chart_discriminant_roots(const BelyiCandidate& b) {
  const FiberPolynomial fp = fiber_polynomial(b);
  std::vector<BigRational> out;
  if (fp.h.degree_in(1) < 1) return out;
  const UPoly disc = discriminant(fp.h, 1).to_univariate(2);
  if (disc.is_zero()) throw std::domain_error("fiber polynomial has a repeated factor");
  for (const auto& [r, mult] : rational_root_and_linear_factors(disc).roots) out.push_back(r);
  return out;
}

int map_degree(const BelyiCandidate& b) {
  const Analysis an = analyse(b);
  const AlgebraicRoute alg(b);
  if (alg.degree() != an.degree) throw std::logic_error("local analysis and resultants disagree on the degree");
  return alg.degree();
}

BelyiReport critical_values(const BelyiCandidate& b) {
  const Analysis an = analyse(b);
  const AlgebraicRoute alg(b);
  BelyiReport rep;
  rep.log = an.log;
  rep.analytic_degree = an.degree;
  rep.degree = alg.degree();
  const int d = b.curve.degree();
  rep.genus = (d - 1) * (d - 2) / 2;
  rep.log.push_back("base locus degree " + std::to_string(alg.base_degree()));

  std::map<BigRational, std::vector<int>> finite;
  std::vector<int> at_inf;
  std::vector<UPoly> irrational_values;
  for (const auto& f : an.families) {
    rep.ramification_total += f.point_count() * (f.e - 1);
    if (f.infinite) {
      for (int i = 0; i < f.points_per_value; ++i) at_inf.push_back(f.e);
      continue;
    }
    const auto lf = rational_root_and_linear_factors(f.values);
    for (const auto& [root, mult] : lf.roots)
      for (int i = 0; i < mult * f.points_per_value; ++i) finite[root].push_back(f.e);
    if (lf.residual.degree() >= 1 && f.e >= 2) {
      rep.irrational.push_back({lf.residual, f.points_per_value, f.e});
      irrational_values.push_back(lf.residual);
      rep.log.push_back("non-rational critical values from " + f.origin + ": roots of " + lf.residual.to_string());
    }
  }
  rep.rh_defect = (2L * rep.genus - 2) - (-2L * rep.degree + rep.ramification_total);

  auto complete = [&](std::vector<int> p) {
    long sum = std::accumulate(p.begin(), p.end(), 0L);
    if (sum > rep.degree) throw std::logic_error("fiber exceeds the degree");
    for (; sum < rep.degree; ++sum) p.push_back(1);
    std::sort(p.rbegin(), p.rend());
    return p;
  };
  auto critical = [](const std::vector<int>& p) {
    return std::any_of(p.begin(), p.end(), [](int e) { return e > 1; });
  };

  bool agree = true;
  std::vector<BigRational> finite_values;
  for (const auto& [v, es] : finite) {
    if (!critical(es)) continue;
    CriticalFiber cf{false, v, complete(es)};
    const auto check = alg.profile(v);
    if (check != cf.profile) {
      agree = false;
      rep.log.push_back("fiber over " + to_string(v) + ": local " + profile_text(cf.profile) + ", resultant " +
                        profile_text(check));
    }
    finite_values.push_back(v);
    rep.fibers.push_back(cf);
  }
  const bool inf_critical = critical(at_inf);
  if (inf_critical) {
    CriticalFiber cf{true, 0, complete(at_inf)};
    const auto check = alg.profile(std::nullopt);
    if (check != cf.profile) {
      agree = false;
      rep.log.push_back("fiber over infinity: local " + profile_text(cf.profile) + ", resultant " +
                        profile_text(check));
    }
    rep.fibers.push_back(cf);
  }
  rep.algebraic_profiles_agree = agree && rep.degree == rep.analytic_degree;

  rep.non_rational_critical_value = !irrational_values.empty();
  rep.critical_value_count = finite_values.size() + (inf_critical ? 1 : 0);
  if (!irrational_values.empty()) {
    UPoly prod(BigRational(1));
    for (const auto& p : irrational_values) prod = prod * p;
    rep.critical_value_count += static_cast<std::size_t>(distinct_root_count(prod));
  }

  // t0, t1: smallest positive integers whose fiber is reduced
  int found = 0;
  for (long t = 1; found < 2; ++t) {
    const BigRational tv(t);
    if (finite.count(tv) != 0 && critical(finite.at(tv))) continue;
    bool hits_irrational = false;
    for (const auto& p : irrational_values)
      if (p.eval(tv) == 0) hits_irrational = true;
    if (hits_irrational) continue;
    const auto prof = alg.profile(tv);
    if (static_cast<int>(prof.size()) != rep.degree) {
      rep.log.push_back("value " + std::to_string(t) + " has a non-reduced fiber " + profile_text(prof));
      rep.algebraic_profiles_agree = false;
      continue;
    }
    if (found == 0) {
      rep.generic_value = tv;
    } else {
      rep.second_generic_value = tv;
      rep.second_fiber_count = static_cast<int>(prof.size());
    }
    ++found;
  }

  rep.normalization = rep.non_rational_critical_value ? "none" : moebius_text(finite_values, inf_critical);
  return rep;
}

std::vector<BelyiHeightRow> belyi_height_report(int d) {
  if (d < 3) throw std::invalid_argument("degree below cubic");
  std::vector<BelyiHeightRow> rows;
  for (CurveType t : kAllCurveTypes) {
    const auto rep = critical_values(table_candidate(t, d));
    const BigInt table = belyi_table_row(t, d).table_degree;
    rows.push_back({t, rep.degree, rep.critical_value_count, table, BigInt(rep.degree) == table,
                    rep.rh_defect == 0});
  }
  return rows;
}

}  // namespace trinomia
