// wave-lab: command-line driver for the wave equation experiments.
//
// Exit codes: 0 success, 1 internal error, 2 invalid command line or config,
// 3 a tolerance check failed.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "commands.hpp"
#include "config_schema.hpp"
#include "wavelab/random.hpp"
#include "wavelab/version.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;
using namespace wavelab::cli;

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kInvalid = 2;
constexpr int kTolerance = 3;

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int config_error(const std::string& pointer, const std::string& message) {
  std::cerr << "wave-lab: invalid config at " << pointer << ": " << message << '\n';
  return kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical experiments for the wave equation u_tt = Laplacian u"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string out_dir = "wave-lab-out";
  std::uint64_t seed = 20240611;
  std::string profile = "default";
  int jobs = 1;
  app.add_option("--config", config_path, "JSON experiment config")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_option("--seed", seed, "Seed for random corpora and probes")->capture_default_str();
  app.add_option("--tolerance-profile", profile, "strict also fails on advisory flags")
      ->check(CLI::IsMember({"strict", "default"}))
      ->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 4096))->capture_default_str();
  const std::map<std::string, std::string> blurbs = {
      {"propagate", "Evolve Gaussian data spectrally; norms, energy, growth bound"},
      {"reconcile", "Compare spectral solutions with d'Alembert or Kirchhoff formulas"},
      {"energy", "Energy conservation and the growth identity (spectral and modal)"},
      {"growth", "Growth series of ||u(t)|| for explicit examples, with a log-log fit"},
      {"average", "Ball and sphere averages, Kirchhoff identity, ball/cube transform decay"},
      {"smooth", "Smoothing ratios of the ball average on a random band-limited corpus"},
      {"adjoint", "Generator adjoint identity on a Dirichlet mode system"},
      {"resolvent", "Resolvent norms against 1/(lambda - 1/2)"},
      {"exhaust", "Dirichlet boxes exhausting the whole space"},
      {"suite", "Run the acceptance criteria"}};
  for (const auto& name : subcommand_names()) {
    const auto it = blurbs.find(name);
    app.add_subcommand(name, it == blurbs.end() ? "" : it->second)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }
  const std::string subcommand = app.get_subcommands().front()->get_name();

  json config = json::object();
  std::string config_text;
  if (!config_path.empty()) {
    try {
      config_text = read_file(config_path);
      config = json::parse(config_text);
    } catch (const json::parse_error& e) {
      return config_error("/", std::string("not valid JSON (") + e.what() + ")");
    } catch (const std::exception& e) {
      return config_error("/", e.what());
    }
  }
  const auto violations = validate_against_schema(config_schema(), config);
  if (!violations.empty()) {
    for (const auto& v : violations) config_error(v.pointer, v.message);
    return kInvalid;
  }

  RunContext context;
  context.subcommand = subcommand;
  if (config.contains(subcommand)) context.section = config[subcommand];
  context.seed = seed;
  context.strict = profile == "strict";
  context.jobs = jobs;
  context.out_dir = out_dir;

  const auto started = std::chrono::steady_clock::now();
  const auto started_utc = utc_now();
  CommandResult result;
  try {
    fs::create_directories(context.out_dir);
    result = run_subcommand(context);
  } catch (const ConfigError& e) {
    return config_error(e.pointer(), e.what());
  } catch (const std::exception& e) {
    std::cerr << "wave-lab: internal error: " << e.what() << '\n';
    return kInternal;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  try {
    json outputs = json::array();
    for (const auto& o : result.outputs) {
      outputs.push_back({{"file", o.file},
                         {"operation", o.operation},
                         {"description", o.description},
                         {"sha256", sha256_hex(read_file(context.out_dir / o.file))}});
    }
    const json manifest = {
        {"tool", "wave-lab"},
        {"subcommand", subcommand},
        {"config", {{"path", config_path.empty() ? json(nullptr) : json(config_path)},
                    {"sha256", sha256_hex(config_text)}}},
        {"seed", seed},
        {"prng", wavelab::Rng::kName},
        {"tolerance_profile", profile},
        {"jobs", jobs},
        {"versions",
         {{"wavelab", wavelab::library_version()},
          {"fftw", wavelab::fftw_version()},
          {"boost", wavelab::boost_version()},
          {"compiler", wavelab::compiler_version()}}},
        {"started_utc", started_utc},
        {"wall_time_seconds", wall},
        {"outputs", outputs},
        {"violations", result.violations},
        {"status", result.violations.empty() ? "ok" : "tolerance_failure"}};
    std::ofstream out(context.out_dir / "manifest.json");
    out << manifest.dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write manifest.json");
  } catch (const std::exception& e) {
    std::cerr << "wave-lab: internal error: " << e.what() << '\n';
    return kInternal;
  }

  for (const auto& line : result.messages) std::cout << line << '\n';
  if (!result.violations.empty()) {
    for (const auto& v : result.violations) std::cerr << "wave-lab: tolerance failure: " << v << '\n';
    return kTolerance;
  }
  return kOk;
}
