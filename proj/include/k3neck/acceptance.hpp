#pragma once

// The acceptance suite: one check per headline property, each returning a
// pass/fail flag plus a JSON detail record. Detail records contain only
// deterministic values (no timings), so a fixed seed gives byte-identical
// output; wall-clock times are kept separately.

#include <string>
#include <vector>

#include <json.hpp>

#include "k3neck/config.hpp"

namespace k3neck::acceptance {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  nlohmann::json detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 = no runtime budget
};

CriterionResult elliptic_identities(const RunConfig& cfg);
CriterionResult diophantine_condition(const RunConfig& cfg);
CriterionResult picard_lattice(const RunConfig& cfg);
CriterionResult toroidal_theta(const RunConfig& cfg);
CriterionResult gluing(const RunConfig& cfg);
CriterionResult neck_metric(const RunConfig& cfg);
CriterionResult family(const RunConfig& cfg);

// The seven module criteria, in a fixed order.
std::vector<CriterionResult> run_module_criteria(const RunConfig& cfg);

inline constexpr double kEndToEndBudgetSeconds = 300.0;

// {"criteria": [...], "passed": n, "failed": m} without timings.
nlohmann::json report_json(const std::vector<CriterionResult>& results, const RunConfig& cfg);

// Runs the module criteria twice and checks zero failures, the runtime
// budget, and byte-identical reports.
CriterionResult end_to_end(const RunConfig& cfg, std::vector<CriterionResult>* first_run = nullptr);

}  // namespace k3neck::acceptance
