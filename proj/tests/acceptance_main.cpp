// Prints one PASS/FAIL line per headline criterion. Exit status 1 on any
// failure. Per-check details go to stdout with --verbose, timings to stderr.

#include <cstdio>
#include <cstring>
#include <iostream>

#include "k3neck/acceptance.hpp"
#include "k3neck/errors.hpp"

int main(int argc, char** argv) {
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--verbose") == 0) {
      verbose = true;
    } else {
      std::fprintf(stderr, "usage: %s [--verbose]\n", argv[0]);
      return 2;
    }
  }
  k3neck::RunConfig cfg;
  try {
    cfg = k3neck::load_run_config(std::nullopt);
  } catch (const k3neck::DomainError& e) {
    std::fprintf(stderr, "config: %s\n", e.what());
    return 2;
  }

  std::vector<k3neck::acceptance::CriterionResult> results;
  const auto e2e = k3neck::acceptance::end_to_end(cfg, &results);
  results.push_back(e2e);

  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s %-12s %s\n", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str());
    std::fprintf(stderr, "  %-12s %.2fs\n", r.id.c_str(), r.seconds);
    if (verbose || !r.passed) {
      for (const auto& c : r.detail) {
        if (verbose || !c.at("ok").get<bool>()) std::cout << "    " << c.dump() << "\n";
      }
    }
    failed += !r.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
