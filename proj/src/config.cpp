#include "k3neck/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "k3neck/errors.hpp"

namespace k3neck {

std::map<std::string, double> RunConfig::default_tolerances() {
  return {
      {"cubic", 1e-8},       {"ode", 1e-8},          {"j", 1e-6},        {"qseries", 1e-8},
      {"cocycle", 1e-9},     {"gluing", 1e-10},      {"pullback", 1e-6}, {"determinant", 1e-12},
      {"ricci", 1e-6},       {"translation", 1e-10}, {"ninth", 1e-12},   {"slope", 0.01},
      {"mollifier", 1e-10},
  };
}

double RunConfig::tol(const std::string& name) const {
  const auto it = tolerances.find(name);
  if (it == tolerances.end()) throw DomainError("unknown tolerance '" + name + "'");
  return it->second;
}

void RunConfig::validate() const {
  for (const auto& [name, value] : tolerances) {
    if (!(value > 0.0)) throw DomainError("tolerance '" + name + "' must be positive");
  }
  if (!(truncation_radius >= 2.0)) throw DomainError("truncation_radius must be >= 2");
  if (n_max < 10) throw DomainError("n_max must be >= 10");
}

void RunConfig::merge_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DomainError("config must be a JSON object");
  try {
    if (doc.contains("tolerances")) {
      for (const auto& [name, value] : doc.at("tolerances").items()) tolerances[name] = value.get<double>();
    }
    if (doc.contains("truncation_radius")) truncation_radius = doc.at("truncation_radius").get<double>();
    if (doc.contains("n_max")) n_max = doc.at("n_max").get<std::int64_t>();
    if (doc.contains("seed")) seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("output")) {
      const std::string out = doc.at("output").get<std::string>();
      if (out == "json") {
        output = OutputFormat::json;
      } else if (out == "csv") {
        output = OutputFormat::csv;
      } else {
        throw DomainError("config output must be json or csv");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("config has a field of the wrong type: ") + e.what());
  }
  validate();
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  merge_json(buf.str());
}

RunConfig load_run_config(const std::optional<std::string>& explicit_path) {
  RunConfig cfg;
  if (explicit_path) {
    cfg.load_file(*explicit_path);
  } else if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') {
    cfg.load_file(env);
  }
  cfg.validate();
  return cfg;
}

}  // namespace k3neck
