#pragma once

#include <string>

#include "json.hpp"
#include "trinomia/curve.hpp"

namespace trinomia {

/// {"d": 4, "P": [[4,0,0],[0,4,0],[0,1,3]], "A": ["1","1","1"], "type": "small_jordan"}
/// "type" and "A" are optional (A defaults to ones). Integers are accepted in
/// place of coefficient strings. Throws std::invalid_argument on malformed input.
TrinomialCurve curve_from_json(const nlohmann::json& j);
nlohmann::json curve_to_json(const TrinomialCurve& c);

TrinomialCurve load_curve_file(const std::string& path);

nlohmann::json matrix_to_json(const IntMatrix& m);

}  // namespace trinomia
