#include <doctest.h>

#include <random>

#include "k3neck/errors.hpp"
#include "k3neck/neck.hpp"

using namespace k3neck;

namespace {
const NeckChartSpec kPlus{cplx(0.25, 1.2), std::sqrt(2.0), std::sqrt(3.0), 2.0, Side::plus};
}

TEST_CASE("deck transformations compose and monodromy matches") {
  const NeckPoint pt{cplx(0.3, 0.4), cplx(0.05, 0.02)};
  const NeckPoint a = deck(deck(pt, kPlus, 1, 2), kPlus, -1, 1);
  const NeckPoint b = deck(pt, kPlus, 0, 3);
  CHECK(std::abs(a.z - b.z) < 1e-14);
  CHECK(std::abs(a.w - b.w) < 1e-14);
  CHECK(std::abs(std::abs(monodromy(kPlus, Loop::alpha)) - 1.0) < 1e-15);
}

TEST_CASE("canonicalize is idempotent and preserves the class") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int k = 0; k < 100; ++k) {
    const NeckPoint pt{cplx(u(gen), u(gen)), std::polar(0.05 + 0.01 * k, u(gen))};
    const NeckPoint c = canonicalize(pt, kPlus);
    const NeckPoint cc = canonicalize(c, kPlus);
    CHECK(c.z == cc.z);
    CHECK(c.w == cc.w);
    CHECK(class_distance(pt, c, kPlus) < 1e-12);
  }
}

TEST_CASE("regions by modulus") {
  const GlueParams g{cplx(0.01, 0), 0.0, 0.25};
  CHECK(region_of({0.0, 0.04}, g, kPlus) == Region::inside_excluded_core);
  CHECK(region_of({0.0, 0.1}, g, kPlus) == Region::in_Vs);
  CHECK(region_of({0.0, 0.5}, g, kPlus) == Region::in_Ms_bulk);
  CHECK(region_of({0.0, 3.0}, g, kPlus) == Region::outside_W);
  CHECK_THROWS_AS(transition_fs({0.0, 0.5}, g, kPlus), DomainError);
}

TEST_CASE("transition map inverts |w| across the middle circle") {
  const GlueParams g{cplx(0.0004, 0.0003), cplx(0.1, -0.2), 0.25};
  const NeckPoint pt{cplx(0.2, 0.3), std::polar(0.03, 0.5)};
  const NeckPoint out = transition_fs(pt, g, kPlus);
  CHECK(std::abs(out.w) == doctest::Approx(std::abs(g.s) / 0.03));
  const NeckPoint back = transition_fs(out, g, kPlus.opposite());
  CHECK(class_distance(back, pt, kPlus) < 1e-12);
}

TEST_CASE("symplectic form pulls back with a constant -1") {
  const GlueParams g{cplx(0.01, 0), 0.0, 0.25};
  const PullbackResult r = two_form_pullback_check({cplx(0.1, 0.2), std::polar(0.1, 1.0)}, g, kPlus);
  CHECK(std::abs(r.ratio_fd + 1.0) < 1e-6);
  CHECK(r.ratio_symbolic.coef == -1.0);
  CHECK(r.ratio_symbolic.s_pow == 0);
  CHECK(r.ratio_symbolic.w_pow == 0);
}

TEST_CASE("monomial algebra") {
  const Monomial a{2.0, 1, -1}, b{-0.5, 0, 2};
  const Monomial p = a * b;
  CHECK(p.coef == -1.0);
  CHECK(p.s_pow == 1);
  CHECK(p.w_pow == 1);
  const Monomial d = b.d_dw();
  CHECK(d.coef == -1.0);
  CHECK(d.w_pow == 1);
}

TEST_CASE("involution swaps sides and squares to the identity") {
  const SidedPoint x{{cplx(0.1, 0.1), cplx(0.1, 0)}, Side::minus};
  CHECK(involution_F(x).side == Side::plus);
  CHECK(involution_F(involution_F(x)) == x);
}

TEST_CASE("torus cycle integral") {
  const cplx val = torus_cycle_integral(kPlus, 0.5, 64) / cplx(0, 2 * kPi);
  const cplx want = kPlus.q - kPlus.p * kPlus.tau;
  CHECK(std::min(std::abs(val - want), std::abs(val + want)) < 1e-8);
}
