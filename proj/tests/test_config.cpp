#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "k3neck/config.hpp"
#include "k3neck/errors.hpp"

using namespace k3neck;

TEST_CASE("defaults are positive and complete") {
  const RunConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.tol("gluing") == 1e-10);
  CHECK_THROWS_AS(cfg.tol("nonsense"), DomainError);
}

TEST_CASE("merge overlays only present keys") {
  RunConfig cfg;
  cfg.merge_json(R"({"tolerances": {"ricci": 1e-5}, "seed": 3, "output": "csv"})");
  CHECK(cfg.tol("ricci") == 1e-5);
  CHECK(cfg.tol("cubic") == 1e-8);
  CHECK(cfg.seed == 3);
  CHECK(cfg.output == OutputFormat::csv);
  CHECK_THROWS_AS(cfg.merge_json("[1]"), DomainError);
  CHECK_THROWS_AS(cfg.merge_json(R"({"n_max": "many"})"), DomainError);
  CHECK_THROWS_AS(cfg.merge_json(R"({"tolerances": {"j": 0}})"), DomainError);
  CHECK_THROWS_AS(cfg.merge_json("{"), DomainError);
}

TEST_CASE("environment variable supplies the path; explicit path wins") {
  const std::string a = "k3neck_test_cfg_a.json", b = "k3neck_test_cfg_b.json";
  std::ofstream(a) << R"({"seed": 11})";
  std::ofstream(b) << R"({"seed": 22})";
  setenv(kConfigEnvVar, a.c_str(), 1);
  CHECK(load_run_config(std::nullopt).seed == 11);
  CHECK(load_run_config(b).seed == 22);
  setenv(kConfigEnvVar, "/nonexistent/k3neck.json", 1);
  CHECK_THROWS_AS(load_run_config(std::nullopt), DomainError);
  unsetenv(kConfigEnvVar);
  CHECK(load_run_config(std::nullopt).seed == RunConfig{}.seed);
  std::remove(a.c_str());
  std::remove(b.c_str());
}
