#pragma once

#include <json.hpp>

#include "qcol/colmatrix.hpp"
#include "qcol/count.hpp"
#include "qcol/laurent.hpp"

namespace qcol {

/// Polynomials serialize as an object mapping exponent strings to integer
/// coefficients: 1 - 3m + m^2 <-> {"0": 1, "1": -3, "2": 1}. Coefficients
/// outside the 64-bit range are written as decimal strings.
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ColouringMatrix& a);
ColouringMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json count_to_json(const std::string& knot, const CountResult& r);

}  // namespace qcol
