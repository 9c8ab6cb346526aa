#include "k3neck/metric.hpp"

#include <algorithm>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "k3neck/errors.hpp"

namespace k3neck {

namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr unsigned kDepth = 12;
constexpr double kQuadTol = 1e-12;

double bump(double x) {
  const double d = x * x - 1.0;
  if (d >= 0.0) return 0.0;
  return std::exp(1.0 / d);
}

template <class F>
double integrate(F f, double a, double b) {
  if (a == b) return 0.0;
  return gauss_kronrod<double, 61>::integrate(f, a, b, kDepth, kQuadTol);
}

}  // namespace

double mollifier_constant() {
  static const double a = 1.0 / integrate(bump, -1.0, 1.0);
  return a;
}

double mollifier_eta(double x) {
  if (std::abs(x) >= 1.0) return 0.0;
  return mollifier_constant() * bump(x);
}

double mollifier_cdf(double u) {
  if (u <= -1.0) return 0.0;
  if (u >= 1.0) return 1.0;
  if (u == 0.0) return 0.5;
  const double half = integrate(mollifier_eta, 0.0, std::abs(u));
  return u > 0.0 ? 0.5 + half : 0.5 - half;
}

double mollifier_upper_moment(double v) {
  const double a = std::abs(v);
  if (a >= 1.0) return 0.0;
  return integrate([](double x) { return x * mollifier_eta(x); }, a, 1.0);
}

void CutoffSpec::validate() const {
  if (!(r > 1.0)) throw DomainError("cutoff: r must exceed 1");
  if (!(r2 > 1.0 && r2 < r)) throw DomainError("cutoff: need 1 < r2 < r");
  if (!(r1 > 0.0 && r1 < r2)) throw DomainError("cutoff: need 0 < r1 < r2");
}

double cutoff_f_tilde(double x, const CutoffSpec& spec) {
  spec.validate();
  const double c = spec.jump();
  const double d = spec.delta();
  return mollifier_cdf((x + c) / d) - mollifier_cdf((x - c) / d);
}

double theta_s(double t, cplx s) {
  if (!(t > 0.0)) throw DomainError("theta_s: t must be positive");
  if (std::abs(s) == 0.0) throw DomainError("theta_s: s must be nonzero");
  const double l = std::log(t * t / std::abs(s));
  return l * l;
}

double psi_s(const NeckPoint& pt, const CutoffSpec& spec, cplx s) {
  spec.validate();
  const double t = std::abs(pt.w);
  if (t >= spec.r) return 0.0;
  if (t == 0.0) throw DomainError("psi_s: undefined on the divisor w = 0");
  const double f = cutoff_f_tilde(t, spec);
  if (f == 0.0) return 0.0;
  return f * theta_s(t, s);
}

double regularized_max(double t1, double t2, std::pair<double, double> gamma) {
  const auto [g1, g2] = gamma;
  if (!(g1 > 0.0) || !(g2 > 0.0)) throw DomainError("regularized_max: gamma components must be positive");
  if (std::abs(t1 - t2) >= g1 + g2) return std::max(t1, t2);
  // max(t1+h1, t2+h2) = t1 + h1 + (D + h2 - h1)^+ with D = t2 - t1, and
  // E[h1] = 0; the h2-average of (c + h2)^+ is c(1 - F(-c/g2)) + g2 G(-c/g2).
  const double D = t2 - t1;
  auto inner = [g2](double c) {
    const double v = -c / g2;
    if (v >= 1.0) return 0.0;
    if (v <= -1.0) return c;
    return c * (1.0 - mollifier_cdf(v)) + g2 * mollifier_upper_moment(v);
  };
  const double excess = integrate([&](double u) { return inner(D - g1 * u) * mollifier_eta(u); }, -1.0, 1.0);
  return t1 + excess;
}

double patch_weights(const WeightSampler& phiL, const WeightSampler& phiC, double eps, const NeckPoint& pt) {
  if (!(eps > 0.0)) throw DomainError("patch_weights: eps must be positive");
  if (!phiL.surface || !phiC.surface) throw DomainError("patch_weights: sampler missing");
  const double l = phiL.surface(pt);
  const double c = phiC.surface(pt);
  if (!std::isfinite(l) || !std::isfinite(c)) throw NumericError("patch_weights: sampler returned a non-finite weight");
  return regularized_max(l, c + std::log(eps));
}

std::pair<WeightSampler, WeightSampler> model_weight_samplers(const CutoffSpec& spec, double eps0, double eps) {
  spec.validate();
  const double inner = std::sqrt(eps0) * spec.r;
  if (!(inner < spec.r1)) throw DomainError("model samplers: need sqrt(eps0) r < r1");
  const double mid = 0.5 * (inner + spec.r1);
  const double gap = std::min(std::log(spec.r1 * spec.r1 / (mid * mid)), std::log(mid * mid / (inner * inner)));
  const double kappa = 3.0 / gap;
  WeightSampler L{[kappa, mid](const NeckPoint& pt) { return kappa * std::log(std::norm(pt.w) / (mid * mid)); },
                  WeightSampler::Role::phi_L};
  WeightSampler C{[eps](const NeckPoint&) { return -std::log(eps); }, WeightSampler::Role::phi_C};
  return {L, C};
}

void NeckMetricSpec::validate() const {
  if (!(b > 0.0)) throw DomainError("neck metric: b must be positive");
  if (b0 <= 0) throw DomainError("neck metric: b0 must be positive");
  if (!(tau.imag() > 0.0)) throw DomainError("neck metric: Im tau must be positive");
  if (!(eps0 > 0.0)) throw DomainError("neck metric: eps0 must be positive");
  if (!(r > 1.0)) throw DomainError("neck metric: r must exceed 1");
  const double m = std::abs(s);
  if (!(m > 0.0 && m < eps0)) throw DomainError("neck metric: need 0 < |s| < eps0");
}

Eigen::Matrix2d neck_metric_matrix(const NeckPoint& pt, const NeckMetricSpec& spec) {
  spec.validate();
  const double t = std::abs(pt.w);
  if (t == 0.0) throw DomainError("neck metric: w = 0 is the removed divisor");
  if (!(t < spec.model_radius())) throw DomainError("neck metric: point outside the model region |w| < sqrt(eps0) r");
  const auto [gz, gw] = neck_metric_entries<double>(t * t, spec);
  Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
  m(0, 0) = gz;
  m(1, 1) = gw;
  return m;
}

double neck_metric_det_formula(double w_abs, const NeckMetricSpec& spec) {
  return 8.0 * spec.b * static_cast<double>(spec.b0) / (kPi * spec.tau.imag() * w_abs * w_abs);
}

double ricci_check(const NeckPoint& pt, const NeckMetricSpec& spec, double h) {
  spec.validate();
  const double t = std::abs(pt.w);
  if (t == 0.0) throw DomainError("ricci_check: w = 0");
  if (!(t < spec.model_radius())) throw DomainError("ricci_check: point outside the model region");
  if (!(h > 0.0) || !(t > 10.0 * h)) throw DomainError("ricci_check: step too large relative to |w|");

  using LD = long double;
  const LD x = pt.w.real(), y = pt.w.imag();
  const LD ex = x / LD(t), ey = y / LD(t);
  auto log_det = [&](LD u, LD v) {
    const auto [gz, gw] = neck_metric_entries<LD>(u * u + v * v, spec);
    return std::log(gz * gw);
  };
  const LD H = h;
  const LD c = log_det(x, y);
  // radial e1 = (ex, ey), tangential e2 = (-ey, ex)
  const LD d_rad = (log_det(x + H * ex, y + H * ey) - 2 * c + log_det(x - H * ex, y - H * ey)) / (H * H);
  const LD d_tan = (log_det(x - H * ey, y + H * ex) - 2 * c + log_det(x + H * ey, y - H * ex)) / (H * H);
  const LD ddbar = (d_rad + d_tan) / 4;
  const LD gw = neck_metric_entries<LD>(LD(t) * LD(t), spec).second;
  return static_cast<double>(std::abs(ddbar) / gw);
}

double radial_length(double t0, double t1, const NeckMetricSpec& spec) {
  spec.validate();
  if (!(t0 > 0.0)) throw DomainError("radial_length: t0 must be positive");
  if (!(t1 > t0)) throw DomainError("radial_length: need t0 < t1");
  if (!(t1 < spec.model_radius())) throw DomainError("radial_length: t1 outside the model region");
  auto integrand = [&](double u) {
    const double t = std::exp(u);
    return std::sqrt(neck_metric_entries<double>(t * t, spec).second) * t;
  };
  return integrate(integrand, std::log(t0), std::log(t1));
}

}  // namespace k3neck
