#pragma once

// Run configuration shared by the CLI and the acceptance suite. Loaded from a
// JSON file (path from --config or the K3NECK_CONFIG environment variable);
// anything not in the file keeps its default.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace k3neck {

inline constexpr const char* kConfigEnvVar = "K3NECK_CONFIG";

enum class OutputFormat { json, csv };

struct RunConfig {
  std::map<std::string, double> tolerances = default_tolerances();
  double truncation_radius = 100.0;
  std::int64_t n_max = 100000;
  std::uint64_t seed = 20240607;
  OutputFormat output = OutputFormat::json;

  static std::map<std::string, double> default_tolerances();

  double tol(const std::string& name) const;
  void validate() const;

  // Overlay the keys present in a JSON document.
  void merge_json(const std::string& text);
  void load_file(const std::string& path);
};

// Explicit path wins over the environment variable; neither yields defaults.
RunConfig load_run_config(const std::optional<std::string>& explicit_path);

}  // namespace k3neck
