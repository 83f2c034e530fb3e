#pragma once

#include <json.hpp>

#include "paritypoly/laurent.hpp"

namespace paritypoly {

/// Array of {c, s, t, q, h} objects in rendering order. Coefficients that fit
/// in 64 bits are numbers, larger ones are decimal strings.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace paritypoly
