#include "trinomia/curve_io.hpp"

#include <fstream>
#include <stdexcept>

namespace trinomia {

using nlohmann::json;

TrinomialCurve curve_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("curve must be a JSON object");
  if (!j.contains("P")) throw std::invalid_argument("curve is missing \"P\"");
  const json& pj = j.at("P");
  if (!pj.is_array() || pj.size() != 3) throw std::invalid_argument("\"P\" must be a 3x3 array");
  std::array<ExponentRow, 3> rows{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!pj[i].is_array() || pj[i].size() != 3) throw std::invalid_argument("\"P\" must be a 3x3 array");
    for (std::size_t k = 0; k < 3; ++k) {
      if (!pj[i][k].is_number_integer()) throw std::invalid_argument("exponents must be integers");
      rows[i][k] = pj[i][k].get<int>();
    }
  }
  PowerMatrix p(rows);
  if (j.contains("d") && j.at("d").get<int>() != p.degree()) {
    throw std::invalid_argument("\"d\" disagrees with the row sums of \"P\"");
  }

  std::array<BigRational, 3> a{BigRational(1), BigRational(1), BigRational(1)};
  if (j.contains("A")) {
    const json& aj = j.at("A");
    if (!aj.is_array() || aj.size() != 3) throw std::invalid_argument("\"A\" must hold three coefficients");
    for (std::size_t i = 0; i < 3; ++i) {
      if (aj[i].is_string()) {
        a[i] = parse_rational(aj[i].get<std::string>());
      } else if (aj[i].is_number_integer()) {
        a[i] = BigRational(aj[i].get<long>());
      } else {
        throw std::invalid_argument("coefficients must be strings or integers");
      }
    }
  }

  std::optional<CurveType> type;
  if (j.contains("type") && !j.at("type").is_null()) {
    type = parse_type(j.at("type").get<std::string>());
    if (!type) throw std::invalid_argument("unknown curve type: " + j.at("type").get<std::string>());
  }
  return TrinomialCurve(p, a, type);
}

json curve_to_json(const TrinomialCurve& c) {
  json j;
  j["d"] = c.degree();
  json p = json::array();
  for (const auto& row : c.power_matrix().rows()) p.push_back({row[0], row[1], row[2]});
  j["P"] = p;
  json a = json::array();
  for (const auto& v : c.coefficients()) a.push_back(to_string(v));
  j["A"] = a;
  if (c.type()) j["type"] = std::string(type_name(*c.type()));
  return j;
}

TrinomialCurve load_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open curve file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed curve file: ") + e.what());
  }
  return curve_from_json(j);
}

json matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) {
      if (v.fits_slong_p()) {
        r.push_back(v.get_si());
      } else {
        r.push_back(to_string(v));
      }
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace trinomia
