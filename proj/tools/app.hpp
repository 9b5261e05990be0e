#pragma once

#include "collar/catalog.hpp"
#include "collar/condition.hpp"
#include "collar/triple.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace collar::app {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kViolation = 10,
  kInconclusive = 20,
  kOutOfScope = 30,
};

/// Config problem; `field` is a JSON-pointer-like path to the offending value.
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

struct RunConfig {
  std::string command;
  std::string entry;
  std::string config_path;
  double tol = kDefaultTol;
  int restarts = 16;
  int iters = 500;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  std::vector<std::string> filters;
};

/// What a command operates on: a catalog entry or a triple read from a config file.
struct Input {
  Triple triple;
  const CatalogEntry* entry = nullptr;
  int p = 0;
  bool sphere_flag = false;
  std::string label;
};

/// Parses a config document; see the README for the schema.
Input load_config(const Json& doc);
Input load_config_file(const std::string& path);
/// Resolves `--entry`; throws UnrealizableFamily for out-of-scope entries.
Input resolve_entry(const std::string& text);

struct Outcome {
  Json report;
  int exit_code = kOk;
};

Outcome cmd_decompose(const RunConfig& cfg, const Input& in);
Outcome cmd_certify(const RunConfig& cfg, const Input& in);
Outcome cmd_refute(const RunConfig& cfg, const Input& in);
Outcome cmd_estimate(const RunConfig& cfg, const Input& in);
Outcome cmd_catalog(const RunConfig& cfg);

/// Report for an entry that cannot be built.
Outcome out_of_scope(const RunConfig& cfg, const std::string& entry_text, const std::string& why);

/// Dispatches one command, mapping exceptions to exit codes.
Outcome run(const RunConfig& cfg);

std::string render(const Json& report, const std::string& format);

/// Commands of the regression suite, each a list of argv-style tokens.
std::vector<std::vector<std::string>> suite_commands();

}  // namespace collar::app
