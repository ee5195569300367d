#pragma once

#include <json.hpp>

#include "unexp/constructions.hpp"
#include "unexp/interpolation.hpp"

namespace unexp {

nlohmann::json to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const nlohmann::json& j);

// A configuration serializes as lists of coordinate strings; import parses
// them back through the field, round-tripping exactly.
nlohmann::json to_json(const Configuration& config);
Configuration configuration_from_json(const nlohmann::json& j, FieldHandle field);

nlohmann::json to_json(const UnexpectednessReport& report);
nlohmann::json to_json(const ConstructionResult& result);
nlohmann::json to_json(const GenerationTable& table);
nlohmann::json to_json(const ConditionsTable& table);

}  // namespace unexp
