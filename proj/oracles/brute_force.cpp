#include "brute_force.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <algorithm>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace k3neck::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

double bump(double x) {
  const double d = x * x - 1.0;
  return d >= 0.0 ? 0.0 : std::exp(1.0 / d);
}

// The bump is below 1e-217 outside [-0.999, 0.999]; clipping there keeps
// tanh-sinh abscissas off the endpoints, where boost asserts.
constexpr double kEdge = 0.999;

double tanh_sinh_integral(const auto& f, double lo, double hi) {
  lo = std::max(lo, -kEdge);
  hi = std::min(hi, kEdge);
  if (hi <= lo) return 0.0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, lo, hi, 1e-14);
}

}  // namespace

double min_distance_enumerated(long double p, long double q, std::int64_t n) {
  const long double x = p * n, y = q * n;
  long double best = std::numeric_limits<long double>::infinity();
  for (long double mu = std::floor(x) - 1; mu <= std::floor(x) + 2; mu += 1) {
    for (long double nu = std::floor(y) - 1; nu <= std::floor(y) + 2; nu += 1) {
      const long double d = (x - mu) * (x - mu) + (y - nu) * (y - nu);
      if (d < best) best = d;
    }
  }
  return static_cast<double>(std::sqrt(best));
}

std::int64_t first_gaussian_hit(std::int64_t pn, std::int64_t pd, std::int64_t qn, std::int64_t qd,
                                std::int64_t limit) {
  for (std::int64_t n = 1; n <= limit; ++n) {
    if ((n * pn) % pd == 0 && (n * qn) % qd == 0) return n;
  }
  return 0;
}

double bump_integral() { return tanh_sinh_integral(bump, -1.0, 1.0); }

double normalized_bump_integral(double lo, double hi) {
  return tanh_sinh_integral(bump, lo, hi) / bump_integral();
}

double regularized_max_origin() {
  const double norm = bump_integral();
  // Below -0.98 the mass to the left is under 1e-12 and the outer weight
  // h*bump(h) under 1e-11, so the product is far below double resolution.
  auto cdf = [norm](double h) { return h <= -0.98 ? 0.0 : tanh_sinh_integral(bump, -1.0, h) / norm; };
  return 2.0 * tanh_sinh_integral([&](double h) { return h * bump(h) / norm * cdf(h); }, -1.0, 1.0);
}

cplx semicharacter_stepwise(const std::array<std::array<double, 3>, 3>& E, const std::array<cplx, 3>& rho_gen,
                            const std::array<std::int64_t, 3>& abc) {
  cplx rho(1.0, 0.0);
  std::array<std::int64_t, 3> acc{0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    const std::int64_t steps = abc[static_cast<std::size_t>(i)];
    const int s = steps >= 0 ? 1 : -1;
    // rho(-l) = conj(rho(l)) since E(l, -l) = 0
    const cplx unit = s > 0 ? rho_gen[static_cast<std::size_t>(i)] : std::conj(rho_gen[static_cast<std::size_t>(i)]);
    for (std::int64_t t = 0; t < (steps >= 0 ? steps : -steps); ++t) {
      double e = 0.0;
      for (int j = 0; j < 3; ++j) e += static_cast<double>(acc[static_cast<std::size_t>(j)]) * E[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      e *= s;
      rho *= unit * std::exp(cplx(0.0, kPi * e));
      acc[static_cast<std::size_t>(i)] += s;
    }
  }
  return rho;
}

cplx ninth_point_direct(cplx tau, const std::array<cplx, 8>& points, double p, double q) {
  if (!(tau.imag() > 0.0)) throw std::domain_error("ninth point oracle needs Im tau > 0");
  cplx z = -(q - p * tau);
  for (const cplx& pt : points) z -= pt;
  const double b = z.imag() / tau.imag();
  const double a = z.real() - b * tau.real();
  return (a - std::floor(a)) + (b - std::floor(b)) * tau;
}

}  // namespace k3neck::oracle
