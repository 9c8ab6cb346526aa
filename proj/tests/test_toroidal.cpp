#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "k3neck/errors.hpp"
#include "k3neck/toroidal.hpp"

using namespace k3neck;

namespace {
ToroidalLattice make(cplx tau, const char* p, const char* q) {
  return ToroidalLattice(tau, RealNumberRep::parse(p), RealNumberRep::parse(q));
}
}  // namespace

TEST_CASE("rational pair yields an integral witness") {
  const ToroidalLattice lat = make(cplx(0.3, 1.4), "2/5", "3/4");
  const ToroidalVerdict v = is_toroidal(lat);
  CHECK(v.status == ToroidalVerdict::Status::not_toroidal);
  CHECK(is_witness(v.sigma, lat));
  CHECK(v.sigma(1) == cplx(20, 0));
}

TEST_CASE("float inputs with no small witness are undecided, not toroidal") {
  const ToroidalLattice lat(cplx(0, 1), RealNumberRep::floating(0.41421356), RealNumberRep::floating(0.7320508));
  CHECK(is_toroidal(lat, 50).status == ToroidalVerdict::Status::undecided);
  const ToroidalLattice hit(cplx(0, 1), RealNumberRep::floating(0.25), RealNumberRep::floating(0.5));
  CHECK(is_toroidal(hit, 50).status == ToroidalVerdict::Status::not_toroidal);
}

TEST_CASE("real generators are linearly independent") {
  const ToroidalLattice lat = make(cplx(0.2, 0.9), "sqrt(2)", "1/3");
  Eigen::FullPivLU<Eigen::Matrix<double, 4, 3>> lu(lat.real_generators());
  CHECK(lu.rank() == 3);
}

TEST_CASE("Riemann form failures are reported by kind") {
  const cplx tau(0, 1);
  const ToroidalLattice lat = make(tau, "sqrt(2)", "sqrt(3)");
  HermitianFormSpec bad = h1_from_intersection(3, tau);
  bad.matrix(0, 1) = cplx(0, 1);
  CHECK(riemann_form_check(bad, lat).failed == "hermitian");
  HermitianFormSpec frac = h1_from_intersection(3, tau);
  frac.matrix(0, 0) *= 0.5;
  CHECK(riemann_form_check(frac, lat).failed == "integrality");
  HermitianFormSpec neg = h1_from_intersection(3, tau);
  neg.matrix(0, 0) *= -1.0;
  CHECK(riemann_form_check(neg, lat).failed == "positivity");
  CHECK(riemann_form_check(h1_from_intersection(3, tau), lat).ok);
}

TEST_CASE("semicharacter is multiplicative up to the commutator phase") {
  const cplx tau(0.1, 1.1);
  const ToroidalLattice lat = make(tau, "sqrt(2)", "sqrt(3)");
  const ThetaBundleSpec spec{h1_from_intersection(2, tau), {std::polar(1.0, 0.3), std::polar(1.0, 1.1), cplx(-1, 0)}};
  std::array<std::array<double, 3>, 3> E{};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) E[a][b] = spec.H1(lat.generator(a), lat.generator(b)).imag();
  }
  std::mt19937_64 gen(11);
  for (int k = 0; k < 50; ++k) {
    std::array<std::int64_t, 3> l{};
    for (auto& x : l) x = static_cast<std::int64_t>(gen() % 11) - 5;
    const cplx a = semicharacter(spec, lat, l);
    CHECK(std::abs(std::abs(a) - 1.0) < 1e-12);
    CHECK(std::abs(a - oracle::semicharacter_stepwise(E, spec.rho_gen, l)) < 1e-11);
  }
}

TEST_CASE("cocycle holds for random triples and breaks for non-integral forms") {
  const cplx tau(0, 1);
  const ToroidalLattice lat = make(tau, "sqrt(2)", "sqrt(3)");
  const ThetaBundleSpec spec{h1_from_intersection(3, tau), {cplx(1, 0), cplx(1, 0), cplx(1, 0)}};
  const Vec2c x(cplx(0.3, -0.2), cplx(0.1, 0.7));
  CHECK(cocycle_residual(spec, lat, {1, -2, 1}, {0, 3, -1}, x) < 1e-12);
  const ThetaBundleSpec off{[] {
                              HermitianFormSpec h = h1_from_intersection(3, cplx(0, 1));
                              h.matrix(0, 0) *= 0.5;
                              return h;
                            }(),
                            {cplx(1, 0), cplx(1, 0), cplx(1, 0)}};
  CHECK_THROWS_AS(validate(off, lat), DomainError);
}

TEST_CASE("type and kind") {
  const TypeKind tk = type_and_kind(make(cplx(0, 1), "sqrt(2)", "sqrt(3)"));
  CHECK(tk.type == 1);
  CHECK(tk.kind == 0);
  CHECK(tk.real_rank == 3);
}
