#include "trinomia/orbits.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace trinomia {

std::string_view kill_stage_name(KillStage s) {
  switch (s) {
    case KillStage::None: return "none";
    case KillStage::ZeroLine: return "zero-line";
    case KillStage::FullLine: return "no-zero-line";
    case KillStage::Singular: return "singular";
  }
  return "?";
}

std::vector<ZeroPattern> enumerate_patterns() {
  std::vector<ZeroPattern> out;
  out.reserve(512);
  for (std::uint16_t code = 0; code < 512; ++code) out.push_back(ZeroPattern::from_row_major_code(code));
  return out;
}

std::vector<OrbitReport> orbit_decompose(const std::vector<ZeroPattern>& patterns) {
  std::map<std::uint16_t, std::vector<ZeroPattern>> by_key;
  for (ZeroPattern p : patterns) by_key[p.canonical().row_major_code()].push_back(p);
  std::vector<OrbitReport> out;
  int id = 0;
  for (auto& [key, members] : by_key) {
    std::sort(members.begin(), members.end(),
              [](ZeroPattern a, ZeroPattern b) { return a.row_major_code() < b.row_major_code(); });
    members.erase(std::unique(members.begin(), members.end()), members.end());
    OrbitReport r;
    r.id = id++;
    r.representative = ZeroPattern::from_row_major_code(key);
    r.members = members;
    r.type = type_of_pattern(r.representative);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<OrbitReport> filter_zero_lines(const std::vector<OrbitReport>& orbits) {
  std::vector<OrbitReport> out;
  for (const auto& o : orbits) {
    if (!o.representative.has_zero_row() && !o.representative.has_zero_column()) out.push_back(o);
  }
  return out;
}

std::vector<OrbitReport> filter_full_lines(const std::vector<OrbitReport>& orbits) {
  std::vector<OrbitReport> out;
  for (const auto& o : orbits) {
    if (!o.representative.has_full_row() && !o.representative.has_full_column()) out.push_back(o);
  }
  return out;
}

std::optional<CurveType> type_of_pattern(ZeroPattern p) {
  const auto key = p.canonical();
  for (CurveType t : kAllCurveTypes) {
    if (canonical_matrix(t, 3).pattern().canonical() == key) return t;
  }
  return std::nullopt;
}

namespace {

// Compositions of d into `parts` positive integers, lexicographic.
void compositions(int d, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (d == 0) out.push_back(cur);
    return;
  }
  for (int v = 1; v <= d - (parts - 1); ++v) {
    cur.push_back(v);
    compositions(d - v, parts - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<ExponentRow> row_choices(ZeroPattern pat, int row, int d) {
  std::vector<int> cols;
  for (int j = 0; j < 3; ++j) {
    if (pat.star(row, j)) cols.push_back(j);
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  compositions(d, static_cast<int>(cols.size()), cur, comps);
  std::vector<ExponentRow> out;
  for (const auto& c : comps) {
    ExponentRow r{0, 0, 0};
    for (std::size_t k = 0; k < cols.size(); ++k) r[static_cast<std::size_t>(cols[k])] = c[k];
    out.push_back(r);
  }
  return out;
}

bool passes_single_zero_rule(const PowerMatrix& p) {
  for (const auto& row : p.rows()) {
    const int zeros = static_cast<int>(std::count(row.begin(), row.end(), 0));
    if (zeros == 1 && std::find(row.begin(), row.end(), 1) == row.end()) return false;
  }
  return true;
}

bool has_equal_rows(const PowerMatrix& p) {
  return p.row(0) == p.row(1) || p.row(1) == p.row(2) || p.row(0) == p.row(2);
}

std::array<ExponentRow, 3> sorted_rows(const PowerMatrix& p) {
  auto rows = p.rows();
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

PowerMatrix canonical_exponent_key(const PowerMatrix& p) {
  std::optional<std::array<ExponentRow, 3>> best;
  for (const auto& c : s3_elements()) {
    const auto rows = sorted_rows(p.with_columns(c));
    if (!best || rows < *best) best = rows;
  }
  return PowerMatrix(*best);
}

Resolution resolve_exponents(ZeroPattern pattern, int d, bool use_prefilter) {
  if (d < 3) throw std::invalid_argument("degree below cubic");
  Resolution res;
  const auto r0 = row_choices(pattern, 0, d);
  const auto r1 = row_choices(pattern, 1, d);
  const auto r2 = row_choices(pattern, 2, d);
  std::map<std::array<ExponentRow, 3>, std::size_t> class_index;
  for (const auto& a : r0) {
    for (const auto& b : r1) {
      for (const auto& c : r2) {
        ExponentCandidate cand{PowerMatrix({a, b, c}), true, false, std::nullopt};
        cand.passes_prefilter = passes_single_zero_rule(cand.matrix);
        cand.degenerate = has_equal_rows(cand.matrix);
        if (use_prefilter && !cand.passes_prefilter) {
          res.candidates.push_back(std::move(cand));
          continue;
        }
        cand.verdict = certify_smooth(TrinomialCurve(cand.matrix));
        if (!cand.degenerate && cand.verdict->status == SmoothStatus::SmoothCertified) {
          const auto key = canonical_exponent_key(cand.matrix).rows();
          auto it = class_index.find(key);
          if (it == class_index.end()) {
            it = class_index.emplace(key, res.classes.size()).first;
            res.classes.push_back({PowerMatrix(key), {}});
          }
          res.classes[it->second].members.push_back(cand.matrix);
        }
        res.candidates.push_back(std::move(cand));
      }
    }
  }
  std::sort(res.classes.begin(), res.classes.end(), [](const ExponentClass& x, const ExponentClass& y) {
    return x.representative.rows() < y.representative.rows();
  });
  return res;
}

MonomialEquivalence monomial_equivalent(const TrinomialCurve& a, const TrinomialCurve& b) {
  MonomialEquivalence out;
  if (a.degree() != b.degree()) return out;
  for (const auto& c : s3_elements()) {
    const PowerMatrix ac = a.power_matrix().with_columns(c);
    for (const auto& r : s3_elements()) {
      if (!(ac.with_rows(r) == b.power_matrix())) continue;
      bool coeffs = true;
      for (std::size_t i = 0; i < 3; ++i) {
        if (a.coefficients()[static_cast<std::size_t>(r[i])] != b.coefficients()[i]) coeffs = false;
      }
      if (!coeffs) continue;
      out.equivalent = true;
      out.columns = c;
      out.rows = r;
      return out;
    }
  }
  return out;
}

Classification classify(int d) { return classify(d, enumerate_patterns()); }

Classification classify(int d, const std::vector<ZeroPattern>& enumeration) {
  if (d < 3) throw std::invalid_argument("degree below cubic");
  Classification out;
  out.degree = d;
  out.pattern_count = enumeration.size();
  out.orbits = orbit_decompose(enumeration);
  out.orbit_count = out.orbits.size();

  const auto stage1 = filter_zero_lines(out.orbits);
  const auto stage2 = filter_full_lines(stage1);
  out.after_zero_line = stage1.size();
  out.after_full_line = stage2.size();
  auto survives = [](const std::vector<OrbitReport>& v, int id) {
    return std::any_of(v.begin(), v.end(), [id](const OrbitReport& o) { return o.id == id; });
  };

  const ZeroPattern paper_layout = ZeroPattern::from_row_major_code(0b011100100);
  std::map<CurveType, ClassifiedCurve> found;
  for (auto& o : out.orbits) {
    if (!survives(stage1, o.id)) {
      o.killed_by = KillStage::ZeroLine;
      continue;
    }
    if (!survives(stage2, o.id)) {
      o.killed_by = KillStage::FullLine;
      continue;
    }
    const bool has_paper_layout = std::find(o.members.begin(), o.members.end(), paper_layout) != o.members.end();
    const ZeroPattern work = has_paper_layout ? paper_layout : o.representative;
    const Resolution res = resolve_exponents(work, d);
    if (res.classes.empty()) {
      o.killed_by = KillStage::Singular;
      ExcludedOrbit ex{work, res.candidates,
                       TrinomialCurve(PowerMatrix({{{0, d - 1, 1}, {d, 0, 0}, {d, 0, 0}}})), {}};
      if (has_paper_layout) {
        ex.headline_verdict = certify_smooth(ex.headline);
      } else {
        ex.headline = TrinomialCurve(res.candidates.front().matrix);
        ex.headline_verdict = certify_smooth(ex.headline);
      }
      out.excluded.push_back(std::move(ex));
      continue;
    }
    if (res.classes.size() != 1) throw std::logic_error("orbit resolves to several exponent classes");
    o.resolved = res.classes.front().representative;
    if (!o.type) throw std::logic_error("smooth orbit without an assigned type");
    const TrinomialCurve curve(res.classes.front().members.front(), o.type);
    const auto eq = monomial_equivalent(curve, canonical_curve(*o.type, d));
    if (!eq.equivalent) throw std::logic_error("resolved curve is not equivalent to the canonical form");
    found.emplace(*o.type, ClassifiedCurve{*o.type, curve, eq});
  }
  for (CurveType t : kAllCurveTypes) {
    auto it = found.find(t);
    if (it != found.end()) out.curves.push_back(it->second);
  }
  return out;
}

}  // namespace trinomia
