#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace wavelab::cli {

/// A config value that passed the schema but cannot be used (odd grid size,
/// a box not aligned with the grid, ...). Carries a JSON pointer to the key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string pointer, const std::string& message)
      : std::runtime_error(message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct RunContext {
  std::string subcommand;
  /// The subcommand's config section (an empty object when absent).
  nlohmann::json section = nlohmann::json::object();
  std::uint64_t seed = 20240611;
  bool strict = false;
  int jobs = 1;
  std::filesystem::path out_dir;
};

/// One emitted file and the library operations its numbers come from.
struct OutputRecord {
  std::string file;
  std::string operation;
  std::string description;
};

struct CommandResult {
  std::vector<OutputRecord> outputs;
  /// Names of violated invariants; nonempty means a tolerance failure.
  std::vector<std::string> violations;
  /// Lines for stdout.
  std::vector<std::string> messages;
};

const std::vector<std::string>& subcommand_names();

/// Runs one subcommand, writing its outputs into context.out_dir. Throws
/// ConfigError for unusable config values.
CommandResult run_subcommand(const RunContext& context);

}  // namespace wavelab::cli
