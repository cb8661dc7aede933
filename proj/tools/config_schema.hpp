#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace wavelab::cli {

/// A schema violation located by a JSON pointer into the document.
struct SchemaViolation {
  std::string pointer;
  std::string message;
};

/// Validates a document against the subset of JSON Schema (draft 7) used by
/// the bundled schema: type, enum, $ref into "#/definitions", properties,
/// required, additionalProperties, items, minItems, maxItems, minimum,
/// maximum, exclusiveMinimum, exclusiveMaximum. Returns every violation in
/// document order. Throws std::logic_error on any other keyword so a schema
/// never silently means less than it says.
std::vector<SchemaViolation> validate_against_schema(const nlohmann::json& schema,
                                                     const nlohmann::json& document);

/// The config schema compiled into the binary.
const nlohmann::json& config_schema();

/// RFC 6901 escaping of one reference token.
std::string escape_pointer_token(const std::string& token);

}  // namespace wavelab::cli
