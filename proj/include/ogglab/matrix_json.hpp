#pragma once

#include <json.hpp>

#include "ogglab/int_matrix.hpp"
#include "ogglab/polynomial.hpp"

namespace ogglab {

/// {"rows": r, "cols": c, "entries": [["1", "-2"], ...]} with decimal strings.
nlohmann::json matrixToJson(const IntMatrix& m);
IntMatrix matrixFromJson(const nlohmann::json& j);

nlohmann::json vectorToJson(const IntVector& v);
IntVector vectorFromJson(const nlohmann::json& j);

nlohmann::json polyToJson(const IntPoly& p);

}  // namespace ogglab
