#pragma once

#include <memory>

#include <json.hpp>

#include "kaccoh/module/kac_module.hpp"

namespace kaccoh {

/// {"p", "lambda": [a, b], "labels", "parity", "actions": [one matrix per algebra basis element]}
nlohmann::json kac_module_to_json(const KacModule& k);
nlohmann::json module_to_json(const GModule& m);

/// Rebuilds the module over `algebra`; throws std::invalid_argument on a
/// malformed document, a modulus mismatch, or a representation-law failure.
GModule module_from_json(const nlohmann::json& doc, std::shared_ptr<const Superalgebra> algebra);

nlohmann::json matrix_to_json(const FpMatrix& m);
FpMatrix matrix_from_json(const PrimeField& f, const nlohmann::json& rows);

} // namespace kaccoh
