#include <doctest.h>

#include <cmath>
#include <cstring>

#include "brute_force.hpp"
#include "k3neck/diophantine.hpp"

using namespace k3neck;

TEST_CASE("rational pairs are refuted at the lcm of denominators") {
  const auto v = check_pair(RealNumberRep::rational(2, 5), RealNumberRep::rational(3, 4), 1000);
  CHECK(v.status == DiophantineVerdict::Status::refuted);
  CHECK(v.witness_n == 20);
  CHECK(oracle::first_gaussian_hit(2, 5, 3, 4, 100) == 20);
}

TEST_CASE("distance at n matches exhaustive Gaussian-integer search") {
  const RealNumberRep p = RealNumberRep::parse("sqrt(5)"), q = RealNumberRep::rational(2, 7);
  for (std::int64_t n : {1, 3, 7, 10, 33, 100, 999}) {
    CHECK(min_distance(p, q, n) ==
          doctest::Approx(static_cast<double>(oracle::min_distance_enumerated(std::sqrt(5.0L), 2.0L / 7.0L, n)))
              .epsilon(1e-12));
  }
  CHECK(min_distance(p, q, 7) == doctest::Approx(p.dist_to_integer(7)));
}

TEST_CASE("parallel scan equals serial scan bit for bit") {
  const RealNumberRep p = RealNumberRep::parse("sqrt(2)"), q = RealNumberRep::parse("sqrt(3)");
  const auto a = distance_scan(p, q, 5000), b = distance_scan_serial(p, q, 5000);
  REQUIRE(a.size() == b.size());
  CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

TEST_CASE("estimated verdict never claims certification") {
  const auto v = check_pair(RealNumberRep::floating(0.4142), RealNumberRep::floating(0.7320508), 2000);
  CHECK(v.status != DiophantineVerdict::Status::certified);
}

TEST_CASE("fit is an envelope: every scanned n satisfies the bound") {
  const RealNumberRep p = RealNumberRep::parse("sqrt(2)"), q = RealNumberRep::parse("sqrt(3)");
  const auto v = check_pair(p, q, 20000);
  const auto d = distance_scan(p, q, 20000);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    CHECK(d[i] >= v.A_fit * std::pow(n, -v.theta_fit) * (1 - 1e-12));
  }
  CHECK(v.min_slack == doctest::Approx(1.0));
}

TEST_CASE("certified tier only for exact quadratic irrationals") {
  CHECK(certify_pair(RealNumberRep::parse("sqrt(2)"), RealNumberRep::rational(1, 2)).has_value());
  CHECK_FALSE(certify_pair(RealNumberRep::floating(1.41421356), RealNumberRep::floating(0.5)).has_value());
  CHECK_FALSE(certify_pair(RealNumberRep::rational(1, 2), RealNumberRep::rational(1, 3)).has_value());
}

TEST_CASE("polynomial bound implies exponential bound") {
  const auto e = check_exponential(RealNumberRep::parse("sqrt(2)"), RealNumberRep::parse("sqrt(3)"), 2000);
  CHECK(e.passes);
  CHECK(e.implication_holds);
  CHECK(polynomial_dominates_exponential(1000000));
}
