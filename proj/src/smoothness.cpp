#include "trinomia/smoothness.hpp"

#include <stdexcept>

#include "trinomia/prime_field.hpp"
#include "trinomia/roots.hpp"

namespace trinomia {

std::string_view status_name(SmoothStatus s) {
  switch (s) {
    case SmoothStatus::SmoothCertified: return "smooth-certified";
    case SmoothStatus::Singular: return "singular";
    case SmoothStatus::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

std::array<MultiPoly, 4> gradient_system(const MultiPoly& f) {
  return {f, f.partial_derivative(0), f.partial_derivative(1), f.partial_derivative(2)};
}

RationalPoint unit_point(int k) {
  RationalPoint p{BigRational(0), BigRational(0), BigRational(0)};
  p[static_cast<std::size_t>(k)] = 1;
  return p;
}

}  // namespace

std::vector<RationalPoint> coordinate_point_check(const TrinomialCurve& c) {
  const auto sys = gradient_system(c.polynomial());
  std::vector<RationalPoint> out;
  for (int k = 0; k < 3; ++k) {
    const RationalPoint pt = unit_point(k);
    bool singular = true;
    for (const auto& g : sys) {
      if (g.evaluate(pt) != 0) {
        singular = false;
        break;
      }
    }
    if (singular) out.push_back(pt);
  }
  return out;
}

std::vector<LineSingularity> coordinate_line_check(const TrinomialCurve& c) {
  const auto sys = gradient_system(c.polynomial());
  const auto names = default_names(3);
  std::vector<LineSingularity> out;
  // line zero = 0, coordinate one = 1, parameter free; free = 0 is a vertex
  struct Line {
    int zero;
    int one;
    int free;
  };
  for (const Line ln : {Line{2, 1, 0}, Line{0, 2, 1}, Line{1, 2, 0}}) {
    UPoly g;
    for (const auto& h : sys) {
      const MultiPoly r = h.specialize(ln.zero, 0).specialize(ln.one, 1);
      g = gcd(g, r.to_univariate(ln.free));
    }
    auto make_point = [&](const BigRational& t) {
      RationalPoint p{};
      p[static_cast<std::size_t>(ln.zero)] = 0;
      p[static_cast<std::size_t>(ln.one)] = 1;
      p[static_cast<std::size_t>(ln.free)] = t;
      return p;
    };
    if (g.is_zero()) {
      out.push_back({make_point(1), names[static_cast<std::size_t>(ln.zero)] + " = 0 (whole line)"});
      continue;
    }
    while (g.degree() >= 1 && g.coeff(0) == 0) g = g.divide_exact(UPoly::monomial(1, 1));
    if (g.degree() < 1) continue;
    const auto lf = rational_root_and_linear_factors(g);
    for (const auto& [r, m] : lf.roots) out.push_back({make_point(r), ""});
    if (lf.residual.degree() >= 1) {
      out.push_back({std::nullopt, names[static_cast<std::size_t>(ln.zero)] + " = 0, " +
                                       lf.residual.to_string(names[static_cast<std::size_t>(ln.free)]) + " = 0 (" +
                                       names[static_cast<std::size_t>(ln.one)] + " = 1)"});
    }
  }
  return out;
}

std::vector<FpPoint> singular_points_mod_p(const MultiPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
  std::vector<PrimeFieldPoly> sys;
  for (const auto& g : gradient_system(f)) sys.push_back(PrimeFieldPoly::reduce(g, p));
  std::vector<FpPoint> out;
  auto test = [&](const FpPoint& pt) {
    for (const auto& g : sys) {
      if (g.evaluate(pt) != 0) return;
    }
    out.push_back(pt);
  };
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) test({1, a, b});
  }
  for (std::uint64_t b = 0; b < p; ++b) test({0, 1, b});
  test({0, 0, 1});
  return out;
}

std::vector<FpPoint> singular_points_mod_p(const TrinomialCurve& c, std::uint64_t p) {
  return singular_points_mod_p(c.polynomial(), p);
}

bool is_good_prime(const TrinomialCurve& c, std::uint64_t p) {
  if (!is_prime(p) || p <= static_cast<std::uint64_t>(c.degree())) return false;
  const BigInt bp(static_cast<unsigned long>(p));
  const BigInt det = determinant(c.power_matrix());
  if (det != 0 && det % bp == 0) return false;
  for (const auto& a : c.coefficients()) {
    if (a.get_num() % bp == 0 || a.get_den() % bp == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> default_prime_budget(const TrinomialCurve& c, int count) {
  std::vector<std::uint64_t> out;
  std::uint64_t p = static_cast<std::uint64_t>(c.degree());
  while (static_cast<int>(out.size()) < count) {
    p = next_prime(p);
    if (is_good_prime(c, p)) out.push_back(p);
  }
  return out;
}

SmoothnessVerdict certify_smooth(const TrinomialCurve& c, const std::vector<std::uint64_t>& prime_budget) {
  if (prime_budget.empty()) throw std::invalid_argument("empty prime budget");
  SmoothnessVerdict v;

  const auto vertices = coordinate_point_check(c);
  if (!vertices.empty()) {
    v.status = SmoothStatus::Singular;
    v.witness = vertices.front();
    v.rationale = "F and its partial derivatives vanish exactly at a coordinate point";
    return v;
  }
  const auto lines = coordinate_line_check(c);
  if (!lines.empty()) {
    v.status = SmoothStatus::Singular;
    v.witness = lines.front().point;
    v.witness_locus = lines.front().locus;
    v.rationale = "F and its partial derivatives have a common zero on a coordinate line";
    return v;
  }

  std::vector<std::uint64_t> good;
  for (std::uint64_t p : prime_budget) {
    if (is_good_prime(c, p)) {
      good.push_back(p);
    } else {
      v.primes_skipped.push_back(p);
    }
  }
  if (good.empty()) throw std::invalid_argument("prime budget contains no good prime");

  if (determinant(c.power_matrix()) == 0) {
    v.status = SmoothStatus::Undetermined;
    v.rationale = "degenerate power matrix: torus points are not controlled by the finite-field scan";
    return v;
  }
  for (std::uint64_t p : good) {
    v.primes_tried.push_back(p);
    if (singular_points_mod_p(c, p).empty()) {
      v.status = SmoothStatus::SmoothCertified;
      v.certifying_prime = p;
      v.rationale =
          "coordinate points and lines checked exactly; det P is a unit mod p, so singular torus points "
          "cannot occur in characteristic 0 or p; the reduction has no singular point in P^2(F_p)";
      return v;
    }
  }
  v.status = SmoothStatus::Undetermined;
  v.rationale = "every good prime in the budget shows singular points mod p";
  return v;
}

SmoothnessVerdict certify_smooth(const TrinomialCurve& c) { return certify_smooth(c, default_prime_budget(c)); }

std::string point_to_string(const RationalPoint& p) {
  return "(" + to_string(p[0]) + ":" + to_string(p[1]) + ":" + to_string(p[2]) + ")";
}

std::string point_to_string(const FpPoint& p) {
  return "(" + std::to_string(p[0]) + ":" + std::to_string(p[1]) + ":" + std::to_string(p[2]) + ")";
}

}  // namespace trinomia
