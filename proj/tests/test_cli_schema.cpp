#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "config_schema.hpp"

using nlohmann::json;
using namespace wavelab::cli;

namespace {

std::vector<std::string> pointers(const json& schema, const json& doc) {
  std::vector<std::string> out;
  for (const auto& v : validate_against_schema(schema, doc)) out.push_back(v.pointer);
  return out;
}

}  // namespace

TEST_CASE("schema subset keywords") {
  const json schema = json::parse(R"({
    "type": "object",
    "additionalProperties": false,
    "required": ["n"],
    "definitions": {"pos": {"type": "number", "exclusiveMinimum": 0}},
    "properties": {
      "n": {"type": "integer", "minimum": 1, "maximum": 4},
      "x": {"$ref": "#/definitions/pos"},
      "mode": {"enum": ["a", "b"]},
      "list": {"type": "array", "minItems": 1, "maxItems": 2, "items": {"type": "number"}}
    }
  })");
  CHECK(pointers(schema, json::parse(R"({"n": 2, "x": 0.5, "mode": "a", "list": [1, 2.5]})")).empty());
  CHECK(pointers(schema, json::parse(R"({"n": 2.0})")).empty());
  CHECK(pointers(schema, json::parse(R"({"n": 2.5})")) == std::vector<std::string>{"/n"});
  CHECK(pointers(schema, json::parse(R"({"n": 9})")) == std::vector<std::string>{"/n"});
  CHECK(pointers(schema, json::parse(R"({"n": 1, "x": 0})")) == std::vector<std::string>{"/x"});
  CHECK(pointers(schema, json::parse(R"({"n": 1, "mode": "c"})")) == std::vector<std::string>{"/mode"});
  CHECK(pointers(schema, json::parse(R"({"n": 1, "list": []})")) == std::vector<std::string>{"/list"});
  CHECK(pointers(schema, json::parse(R"({"n": 1, "list": [1, "q"]})")) == std::vector<std::string>{"/list/1"});
  CHECK(pointers(schema, json::parse(R"({"n": 1, "extra": true})")) == std::vector<std::string>{"/extra"});
  CHECK(pointers(schema, json::parse(R"({})")) == std::vector<std::string>{"/n"});
  CHECK(pointers(schema, json::parse(R"([1])")) == std::vector<std::string>{"/"});

  const auto v = validate_against_schema(schema, json::parse(R"({"n": "x"})"));
  REQUIRE(v.size() == 1);
  CHECK(v[0].message == "expected integer, got \"x\"");

  CHECK_THROWS_AS(validate_against_schema(json::parse(R"({"pattern": "a+"})"), json("a")), std::logic_error);
  CHECK_THROWS_AS(validate_against_schema(json::parse(R"({"$ref": "#/definitions/none"})"), json(1)), std::logic_error);
}

TEST_CASE("pointer escaping") {
  CHECK(escape_pointer_token("a/b~c") == "a~1b~0c");
  CHECK(escape_pointer_token("plain") == "plain");
}

TEST_CASE("bundled config schema") {
  const auto& schema = config_schema();
  CHECK(pointers(schema, json::object()).empty());
  CHECK(pointers(schema, json::parse(R"({"growth": {"eps": 0.7}})")) == std::vector<std::string>{"/growth/eps"});
  CHECK(pointers(schema, json::parse(R"({"growth": {"bogus": 1}})")) == std::vector<std::string>{"/growth/bogus"});
  CHECK(pointers(schema, json::parse(R"({"propagate": {"grid": {"points": "many"}}})")) ==
        std::vector<std::string>{"/propagate/grid/points"});
  CHECK(pointers(schema, json::parse(R"({"suite": {"criteria": [15]}})")) == std::vector<std::string>{"/suite/criteria/0"});

  for (const auto& entry : std::filesystem::directory_iterator(WAVELAB_SOURCE_DIR "/configs")) {
    std::ifstream in(entry.path());
    CAPTURE(entry.path().string());
    CHECK(pointers(schema, json::parse(in)).empty());
  }
}
