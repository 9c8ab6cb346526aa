#include <doctest.h>

#include <cstring>

#include "brute_force.hpp"
#include "k3neck/errors.hpp"
#include "k3neck/family.hpp"

using namespace k3neck;

TEST_CASE("ninth point satisfies the constraint and matches direct complex arithmetic") {
  const FamilyParams f = FamilyParams::defaults();
  const TorusPoint p9 = ninth_point(f);
  CHECK(ninth_point_residual(f, p9) < 1e-14);
  const ComplexLattice lat(f.tau);
  const cplx direct = oracle::ninth_point_direct(f.tau, f.p_hat, f.p.to_double(), f.q.to_double());
  CHECK(lat.distance_to_lattice(p9.z() - direct) < 1e-13);
}

TEST_CASE("rational (p, q) is rejected") {
  FamilyParams f = FamilyParams::defaults();
  f.p = RealNumberRep::rational(1, 2);
  f.q = RealNumberRep::rational(1, 3);
  CHECK_THROWS_AS(ninth_point(f), DomainError);
}

TEST_CASE("fiber requires a certified ample class") {
  CHECK_THROWS_AS(build_fiber(FamilyParams::defaults(), DivisorClass::uniform(6, 2)), DomainError);
  const FiberDescriptor fib = build_fiber(FamilyParams::defaults(), DivisorClass::uniform(10, 3));
  CHECK(fib.points.size() == 9);
  CHECK(fib.b0 == 3);
}

TEST_CASE("sampling is reproducible and independent of evaluation order") {
  const FamilyParams base = FamilyParams::defaults();
  const auto a = family_sample(base, DivisorClass::uniform(7, 2), 64, 99);
  const auto b = family_sample(base, DivisorClass::uniform(7, 2), 64, 99);
  for (std::size_t n = 0; n < a.size(); ++n) {
    CHECK(a[n].tau == b[n].tau);
    CHECK(a[n].points.back() == b[n].points.back());
    CHECK(sample_params(base, 99, n).tau == a[n].tau);
  }
  CHECK(family_sample(base, DivisorClass::uniform(7, 2), 4, 100)[0].tau != a[0].tau);
}

TEST_CASE("isomorphic fibers are recognised") {
  FamilyParams a = FamilyParams::defaults(), b = FamilyParams::defaults();
  b.tau = -1.0 / a.tau + 1.0;  // i -> i + 1
  for (std::size_t j = 0; j < 8; ++j) b.p_hat[j] = static_cast<double>(j + 1) / 9.0 * (1.0 + b.tau);
  const DivisorClass L = DivisorClass::uniform(7, 2);
  const DistinctnessReport r = fibers_distinct(build_fiber(a, L), build_fiber(b, L));
  CHECK(r.verdict == DistinctnessReport::Verdict::same_curve_class);
}
