#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "k3neck/errors.hpp"
#include "k3neck/metric.hpp"

using namespace k3neck;

TEST_CASE("mollifier: unit mass, even, supported in [-1, 1]") {
  CHECK(mollifier_constant() * oracle::bump_integral() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mollifier_eta(1.0) == 0.0);
  CHECK(mollifier_eta(-1.5) == 0.0);
  CHECK(mollifier_eta(0.3) == mollifier_eta(-0.3));
  CHECK(mollifier_cdf(0.0) == 0.5);
  CHECK(mollifier_cdf(0.4) + mollifier_cdf(-0.4) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mollifier_cdf(0.7) - mollifier_cdf(0.2) == doctest::Approx(oracle::normalized_bump_integral(0.2, 0.7)).epsilon(1e-11));
}

TEST_CASE("regularized max: bounds, symmetry, monotonicity, translation") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 50; ++k) {
    const double a = u(gen), b = u(gen), c = u(gen);
    const double m = regularized_max(a, b);
    CHECK(m >= std::max(a, b) - 1e-14);
    CHECK(m <= std::max(a, b) + 1.0);
    CHECK(m == doctest::Approx(regularized_max(b, a)).epsilon(1e-12));
    CHECK(regularized_max(a + 0.1, b) >= m - 1e-14);
    CHECK(regularized_max(a + c, b + c) == doctest::Approx(m + c).epsilon(1e-12));
  }
  CHECK(regularized_max(5, 0) == 5.0);
  CHECK(regularized_max(0, 0) == doctest::Approx(oracle::regularized_max_origin()).epsilon(1e-12));
  CHECK_THROWS_AS(regularized_max(0, 0, {0.0, 1.0}), DomainError);
}

TEST_CASE("cutoff profile") {
  const CutoffSpec cut;
  CHECK(cutoff_f_tilde(0.0, cut) == 1.0);
  CHECK(cutoff_f_tilde(cut.r2 / 2, cut) == 1.0);
  CHECK(cutoff_f_tilde(cut.r, cut) == 0.0);
  CHECK(cutoff_f_tilde(cut.jump(), cut) == 0.5);
  CHECK(cutoff_f_tilde(1.6, cut) == cutoff_f_tilde(-1.6, cut));
  CHECK_THROWS_AS(cutoff_f_tilde(1.0, CutoffSpec{2.0, 2.5, 1.2}), DomainError);
}

TEST_CASE("Psi vanishes outside the chart and on the middle circle") {
  const CutoffSpec cut;
  const cplx s(0.0036, 0.0);
  CHECK(psi_s({0.0, 2.0}, cut, s) == 0.0);
  CHECK(std::abs(psi_s({0.0, std::polar(0.06, 0.3)}, cut, s)) < 1e-25);
  CHECK(psi_s({0.0, 0.01}, cut, s) > 0.0);
  CHECK_THROWS_AS(psi_s({0.0, 0.0}, cut, s), DomainError);
}

TEST_CASE("metric determinant and Ricci residual") {
  NeckMetricSpec spec;
  spec.b0 = 5;
  spec.tau = cplx(0.3, 0.8);
  spec.b = 0.7;
  for (double t : {0.01, 0.2, 0.9}) {
    const double det = neck_metric_matrix({0.0, std::polar(t, 1.0)}, spec).determinant();
    CHECK(det == doctest::Approx(neck_metric_det_formula(t, spec)).epsilon(1e-13));
  }
  const double r1 = ricci_check({0.0, 0.2}, spec, 2e-4), r2 = ricci_check({0.0, 0.2}, spec, 1e-4);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.02));
  CHECK_THROWS_AS(neck_metric_matrix({0.0, 2.0}, spec), DomainError);
}

TEST_CASE("radial length grows like sqrt(4b/pi) log(1/t)") {
  const NeckMetricSpec spec;
  const double l1 = radial_length(1e-6, 0.5, spec), l2 = radial_length(1e-7, 0.5, spec);
  CHECK((l2 - l1) / std::log(10.0) == doctest::Approx(std::sqrt(4 * spec.b / kPi)).epsilon(1e-3));
}

TEST_CASE("patched weight follows the larger sampler") {
  const CutoffSpec cut;
  const auto [L, C] = model_weight_samplers(cut, 0.25, 0.1);
  const NeckPoint outer{0.0, 1.9}, inner{0.0, 0.3};
  CHECK(patch_weights(L, C, 0.1, outer) == L.surface(outer));
  CHECK(patch_weights(L, C, 0.1, inner) == C.surface(inner) + std::log(0.1));
}
