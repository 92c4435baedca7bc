#pragma once

#include <json.hpp>

#include "wres/sphere/sphere.hpp"

namespace wres {

// [{monomial, pi_power, omega_power, re, im}], one entry per basis element and grade
nlohmann::json terms_to_json(const BoundaryExpression& e);
BoundaryExpression terms_from_json(const nlohmann::json& j);  // throws std::invalid_argument

}  // namespace wres
