#pragma once

#include <nlohmann/json_fwd.hpp>

#include "poly/poly.hpp"

namespace sosv {

// {"terms": [{"exps": {"x1": 2, ...}, "coeff": -3.25}, ...]}
nlohmann::json poly_to_json(const Polynomial& p, const VariableUniverse& universe);
Polynomial poly_from_json(const nlohmann::json& j, const VariableUniverse& universe);

}  // namespace sosv
