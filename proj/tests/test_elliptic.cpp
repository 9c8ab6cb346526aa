#include <doctest.h>

#include <random>

#include "k3neck/elliptic.hpp"
#include "k3neck/errors.hpp"
#include "q_series.hpp"

using namespace k3neck;

TEST_CASE("lattice reduction lands in the fundamental parallelogram") {
  const ComplexLattice lat(cplx(0.4, 1.7));
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-20, 20);
  for (int k = 0; k < 200; ++k) {
    const cplx z(u(gen), u(gen));
    const auto c = lat.coordinates(lat.reduce(z));
    CHECK(c[0] >= 0.0);
    CHECK(c[0] < 1.0);
    CHECK(c[1] >= 0.0);
    CHECK(c[1] < 1.0);
    CHECK(lat.distance_to_lattice(z - lat.reduce(z)) < 1e-12);
  }
}

TEST_CASE("wp is even, dwp odd, and both lattice periodic") {
  const ComplexLattice lat(cplx(0.1, 1.2));
  const cplx z(0.31, 0.47);
  const WeierstrassValue a = weierstrass_p(z, lat), b = weierstrass_p(-z, lat);
  const WeierstrassValue c = weierstrass_p(z + 1.0 + 2.0 * lat.tau(), lat);
  CHECK(std::abs(a.p - b.p) <= 1e-12 * std::abs(a.p));
  CHECK(std::abs(a.dp + b.dp) <= 1e-12 * std::abs(a.dp));
  CHECK(std::abs(a.p - c.p) <= 1e-11 * std::abs(a.p));
}

TEST_CASE("wp at a lattice point is a pole") {
  const ComplexLattice lat(cplx(0, 1));
  CHECK_THROWS_AS(weierstrass_p(cplx(1, 1), lat), PoleError);
  CHECK_THROWS_AS(weierstrass_p(cplx(1e-9, 0), lat), PoleError);
}

TEST_CASE("zero class embeds at the point at infinity") {
  const ComplexLattice lat(cplx(0, 1));
  const ProjectivePoint p = embed(TorusPoint(lat, 0.0)).normalized();
  CHECK(p.coords()[0] == cplx(0));
  CHECK(p.coords()[1] == cplx(1));
  CHECK(p.coords()[2] == cplx(0));
}

TEST_CASE("Eisenstein sums agree with the q-expansion") {
  for (const cplx tau : {cplx(0, 1), cplx(0.5, 0.9), cplx(-0.3, 1.8)}) {
    const ComplexLattice lat(tau);
    CHECK(std::abs(eisenstein(lat, 2).value - oracle::eisenstein_qseries(tau, 2)) < 1e-10);
    CHECK(std::abs(eisenstein(lat, 3).value - oracle::eisenstein_qseries(tau, 3)) < 1e-10);
  }
}

TEST_CASE("j at the hexagonal point is zero, square point 1728") {
  CHECK(std::abs(j_invariant(ComplexLattice(cplx(0, 1))) - 1728.0) < 1e-7);
  CHECK(std::abs(j_invariant(ComplexLattice(std::polar(1.0, 2 * kPi / 3)))) < 1e-7);
}

TEST_CASE("fundamental domain reduction and equivalence") {
  const cplx tau(0.2, 1.3);
  const cplx moved = -1.0 / (tau + 3.0);
  CHECK(modular_equivalent(tau, moved));
  CHECK_FALSE(modular_equivalent(cplx(0, 1), cplx(0, 2)));
  const cplx r = reduce_to_fundamental_domain(moved);
  CHECK(std::abs(r.real()) <= 0.5 + 1e-12);
  CHECK(std::abs(r) >= 1.0 - 1e-12);
}

TEST_CASE("invalid configuration is rejected") {
  LatticeSumConfig cfg;
  cfg.truncation_radius = 0.5;
  CHECK_THROWS_AS(eisenstein(ComplexLattice(cplx(0, 1)), 2, cfg), DomainError);
  CHECK_THROWS_AS(ComplexLattice(cplx(0, -1)), DomainError);
}
