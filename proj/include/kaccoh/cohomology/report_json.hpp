#pragma once

#include <string>

#include <json.hpp>

#include "kaccoh/cohomology/cohomology.hpp"

namespace kaccoh {

/// {"p", "lambda", "dims": {...seven counts...}, "predicted", "agrees",
///  "representatives": [{"parity", "rows", "cols", "matrix"}]}
nlohmann::json report_to_json(const CohomologyReport& r);

std::string report_to_text(const CohomologyReport& r);

} // namespace kaccoh
