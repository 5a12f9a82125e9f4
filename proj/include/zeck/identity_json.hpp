#pragma once

#include <json.hpp>

#include "zeck/identity.hpp"

namespace zeck {

// Wire form {"shifts":[int...],"support":[int...],"n_min":int}, shifts
// sorted ascending with repetitions, support sorted ascending.
nlohmann::json identity_to_json(const Identity& identity);

// Reads the three schema keys and ignores extras. Structural problems
// surface as nlohmann exceptions; a non-holey support throws
// std::invalid_argument.
Identity identity_from_json(const nlohmann::json& doc);

}  // namespace zeck
