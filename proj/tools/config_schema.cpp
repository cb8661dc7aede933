#include "config_schema.hpp"

#include <cmath>
#include <set>

namespace wavelab::cli {

extern const char* const kConfigSchemaText;

namespace {

using nlohmann::json;

const std::set<std::string> kAnnotations = {"$schema", "$id", "title", "description", "definitions",
                                            "default", "$comment"};

std::string describe(const json& value) {
  auto text = value.dump();
  return text.size() > 40 ? text.substr(0, 37) + "..." : text;
}

bool has_type(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  if (type == "number") return value.is_number();
  if (type == "integer") {
    if (value.is_number_integer()) return true;
    if (!value.is_number_float()) return false;
    const double x = value.get<double>();
    return std::isfinite(x) && std::floor(x) == x;
  }
  throw std::logic_error("schema: unknown type '" + type + "'");
}

class Validator {
 public:
  explicit Validator(const json& root) : root_(root) {}

  void check(const json& schema, const json& value, const std::string& pointer) {
    if (schema.is_boolean()) {
      if (!schema.get<bool>()) fail(pointer, "not allowed here");
      return;
    }
    if (!schema.is_object()) throw std::logic_error("schema: subschema at " + pointer + " is not an object");
    if (auto ref = schema.find("$ref"); ref != schema.end()) {
      check(resolve(ref->get<std::string>()), value, pointer);
      return;
    }
    for (const auto& [key, rule] : schema.items()) {
      if (kAnnotations.count(key)) continue;
      if (key == "type") {
        check_type(rule, value, pointer);
      } else if (key == "enum") {
        bool found = false;
        for (const auto& option : rule) found = found || option == value;
        if (!found) fail(pointer, describe(value) + " is not one of " + rule.dump());
      } else if (key == "minimum" || key == "maximum" || key == "exclusiveMinimum" ||
                 key == "exclusiveMaximum") {
        check_bound(key, rule.get<double>(), value, pointer);
      } else if (key == "properties" || key == "required" || key == "additionalProperties") {
        if (value.is_object()) check_object_rule(schema, key, rule, value, pointer);
      } else if (key == "items" || key == "minItems" || key == "maxItems") {
        if (value.is_array()) check_array_rule(key, rule, value, pointer);
      } else {
        throw std::logic_error("schema: unsupported keyword '" + key + "'");
      }
    }
  }

  std::vector<SchemaViolation> take() { return std::move(violations_); }

 private:
  const json& resolve(const std::string& ref) const {
    if (ref.rfind("#/", 0) != 0) throw std::logic_error("schema: only local $ref supported: " + ref);
    const json::json_pointer target(ref.substr(1));
    if (!root_.contains(target)) throw std::logic_error("schema: unresolved $ref " + ref);
    return root_.at(target);
  }

  void check_type(const json& rule, const json& value, const std::string& pointer) {
    if (rule.is_string()) {
      if (!has_type(value, rule.get<std::string>())) {
        fail(pointer, "expected " + rule.get<std::string>() + ", got " + describe(value));
      }
      return;
    }
    for (const auto& option : rule) {
      if (has_type(value, option.get<std::string>())) return;
    }
    fail(pointer, "expected one of " + rule.dump() + ", got " + describe(value));
  }

  void check_bound(const std::string& key, double bound, const json& value, const std::string& pointer) {
    if (!value.is_number()) return;
    const double x = value.get<double>();
    if (key == "minimum" && !(x >= bound)) fail(pointer, "must be >= " + json(bound).dump());
    if (key == "maximum" && !(x <= bound)) fail(pointer, "must be <= " + json(bound).dump());
    if (key == "exclusiveMinimum" && !(x > bound)) fail(pointer, "must be > " + json(bound).dump());
    if (key == "exclusiveMaximum" && !(x < bound)) fail(pointer, "must be < " + json(bound).dump());
  }

  void check_object_rule(const json& schema, const std::string& key, const json& rule, const json& value,
                         const std::string& pointer) {
    if (key == "required") {
      for (const auto& name : rule) {
        if (!value.contains(name.get<std::string>())) {
          fail(pointer + "/" + escape_pointer_token(name.get<std::string>()), "required key is missing");
        }
      }
    } else if (key == "properties") {
      for (const auto& [name, sub] : value.items()) {
        if (auto p = rule.find(name); p != rule.end()) check(*p, sub, pointer + "/" + escape_pointer_token(name));
      }
    } else {
      const json none = json::object();
      const auto& declared = schema.contains("properties") ? schema["properties"] : none;
      for (const auto& [name, sub] : value.items()) {
        if (declared.contains(name)) continue;
        const std::string where = pointer + "/" + escape_pointer_token(name);
        if (rule.is_boolean()) {
          if (!rule.get<bool>()) fail(where, "unknown key");
        } else {
          check(rule, sub, where);
        }
      }
    }
  }

  void check_array_rule(const std::string& key, const json& rule, const json& value, const std::string& pointer) {
    if (key == "items") {
      for (std::size_t i = 0; i < value.size(); ++i) check(rule, value[i], pointer + "/" + std::to_string(i));
    } else if (key == "minItems" && value.size() < rule.get<std::size_t>()) {
      fail(pointer, "needs at least " + rule.dump() + " items");
    } else if (key == "maxItems" && value.size() > rule.get<std::size_t>()) {
      fail(pointer, "allows at most " + rule.dump() + " items");
    }
  }

  void fail(const std::string& pointer, std::string message) {
    violations_.push_back({pointer.empty() ? "/" : pointer, std::move(message)});
  }

  const json& root_;
  std::vector<SchemaViolation> violations_;
};

}  // namespace

std::string escape_pointer_token(const std::string& token) {
  std::string out;
  for (char c : token) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::vector<SchemaViolation> validate_against_schema(const json& schema, const json& document) {
  Validator validator(schema);
  validator.check(schema, document, "");
  return validator.take();
}

const json& config_schema() {
  static const json schema = json::parse(kConfigSchemaText);
  return schema;
}

}  // namespace wavelab::cli
