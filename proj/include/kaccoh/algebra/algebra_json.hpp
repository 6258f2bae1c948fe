#pragma once

#include <json.hpp>

#include "kaccoh/algebra/superalgebra.hpp"

namespace kaccoh {

/// {"p", "labels", "parity", "zgrade", "structure": [i][j][k], "cartan"}
nlohmann::json superalgebra_to_json(const Superalgebra& g);

/// Inverse of superalgebra_to_json. Throws std::invalid_argument on a
/// malformed document or if any superalgebra axiom fails.
Superalgebra superalgebra_from_json(const nlohmann::json& doc);

} // namespace kaccoh
