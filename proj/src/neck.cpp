#include "k3neck/neck.hpp"

#include <cmath>

#include "k3neck/errors.hpp"

namespace k3neck {

namespace {

// e^{2 pi i t}, reducing t first so large step counts keep full accuracy.
cplx unit_phase(double t) {
  const double frac = t - std::floor(t);
  return std::polar(1.0, 2.0 * kPi * frac);
}

// Snapped floor: values a hair below an integer count as that integer, so a
// canonical coordinate recomputed from its own output never flips across
// the parallelogram edge.
std::int64_t snapped_floor(double a) { return static_cast<std::int64_t>(std::floor(a + 1e-13)); }

void require_nonzero(cplx w) {
  if (w == cplx(0.0, 0.0)) throw DomainError("neck point on the zero section (w = 0)");
}

}  // namespace

void NeckChartSpec::validate() const {
  if (!(tau.imag() > 0.0) || !std::isfinite(tau.real())) throw DomainError("neck chart: Im tau must be positive");
  if (!std::isfinite(p) || !std::isfinite(q)) throw DomainError("neck chart: monodromy exponents must be finite");
  if (!(r > 1.0)) throw DomainError("neck chart: r must exceed 1");
}

NeckChartSpec NeckChartSpec::opposite() const {
  NeckChartSpec o = *this;
  o.side = k3neck::opposite(side);
  return o;
}

void GlueParams::validate() const {
  const double m = std::abs(s);
  if (!(m > 0.0)) throw DomainError("glue: s must be nonzero");
  if (!(eps0 > 0.0)) throw DomainError("glue: eps0 must be positive");
  if (!(m < eps0)) throw DomainError("glue: |s| must be below eps0");
  if (!(m < 1.0)) throw DomainError("glue: |s| must be below 1");
}

std::string to_string(Region r) {
  switch (r) {
    case Region::inside_excluded_core:
      return "inside_excluded_core";
    case Region::in_Vs:
      return "in_Vs";
    case Region::in_Ms_bulk:
      return "in_Ms_bulk";
    case Region::outside_W:
      return "outside_W";
  }
  return "outside_W";
}

NeckPoint canonicalize(const NeckPoint& pt, const NeckChartSpec& chart) {
  chart.validate();
  require_nonzero(pt.w);
  const double b = pt.z.imag() / chart.tau.imag();
  const double a = pt.z.real() - b * chart.tau.real();
  const std::int64_t m = snapped_floor(a);
  const std::int64_t n = snapped_floor(b);
  if (m == 0 && n == 0) return pt;
  const double ar = a - static_cast<double>(m);
  const double br = b - static_cast<double>(n);
  NeckPoint out;
  out.z = cplx(ar, 0.0) + br * chart.tau;
  // 1-steps first, then tau-steps.
  out.w = pt.w * unit_phase(-chart.p_exp() * static_cast<double>(m));
  out.w *= unit_phase(-chart.q_exp() * static_cast<double>(n));
  return out;
}

NeckPoint deck(const NeckPoint& pt, const NeckChartSpec& chart, std::int64_t m, std::int64_t n) {
  NeckPoint out;
  out.z = pt.z + static_cast<double>(m) + static_cast<double>(n) * chart.tau;
  out.w = pt.w * unit_phase(chart.p_exp() * static_cast<double>(m)) * unit_phase(chart.q_exp() * static_cast<double>(n));
  return out;
}

double class_distance(const NeckPoint& a, const NeckPoint& b, const NeckChartSpec& chart) {
  const NeckPoint ca = canonicalize(a, chart);
  const NeckPoint cb = canonicalize(b, chart);
  const cplx dz = cb.z - ca.z;
  const double nb = dz.imag() / chart.tau.imag();
  const double mb = dz.real() - nb * chart.tau.real();
  const auto m = static_cast<std::int64_t>(std::nearbyint(mb));
  const auto n = static_cast<std::int64_t>(std::nearbyint(nb));
  // Move a by the lattice vector separating the two representatives.
  const NeckPoint moved = deck(ca, chart, m, n);
  return std::abs(moved.z - cb.z) + std::abs(moved.w - cb.w);
}

cplx monodromy(const NeckChartSpec& chart, Loop loop) {
  return loop == Loop::alpha ? unit_phase(chart.p_exp()) : unit_phase(chart.q_exp());
}

Region region_of(const NeckPoint& pt, const GlueParams& glue, const NeckChartSpec& chart) {
  chart.validate();
  const double mod = std::abs(pt.w);
  const double root = std::sqrt(std::abs(glue.s));
  if (mod <= root / chart.r) return Region::inside_excluded_core;
  if (mod < root * chart.r) return Region::in_Vs;
  if (mod < chart.r) return Region::in_Ms_bulk;
  return Region::outside_W;
}

NeckPoint transition_fs(const NeckPoint& pt, const GlueParams& glue, const NeckChartSpec& from_chart) {
  glue.validate();
  require_nonzero(pt.w);
  if (region_of(pt, glue, from_chart) != Region::in_Vs) throw DomainError("transition_fs: point is not in V_s");
  const cplx shift = from_chart.side == Side::plus ? glue.xi : -glue.xi;
  const NeckPoint raw{pt.z + shift, glue.s / pt.w};
  return canonicalize(raw, from_chart.opposite());
}

SidedPoint involution_F(const SidedPoint& x) { return {x.pt, opposite(x.side)}; }

PullbackResult two_form_pullback_check(const NeckPoint& pt, const GlueParams& glue, const NeckChartSpec& chart,
                                       double h) {
  glue.validate();
  if (region_of(pt, glue, chart) != Region::in_Vs) throw DomainError("pullback check: point is not in V_s");
  if (!(h > 0.0) || h > 1e-2 * std::abs(pt.w)) throw DomainError("pullback check: step must be small relative to |w|");
  const cplx shift = chart.side == Side::plus ? glue.xi : -glue.xi;
  // The raw chart map; canonicalization would only add locally constant deck factors.
  auto f = [&](cplx z, cplx w) { return std::array<cplx, 2>{z + shift, glue.s / w}; };

  const auto fz_p = f(pt.z + h, pt.w), fz_m = f(pt.z - h, pt.w);
  const auto fw_p = f(pt.z, pt.w + h), fw_m = f(pt.z, pt.w - h);
  const cplx dzp_dz = (fz_p[0] - fz_m[0]) / (2.0 * h);
  const cplx dwp_dz = (fz_p[1] - fz_m[1]) / (2.0 * h);
  const cplx dzp_dw = (fw_p[0] - fw_m[0]) / (2.0 * h);
  const cplx dwp_dw = (fw_p[1] - fw_m[1]) / (2.0 * h);
  const cplx det = dzp_dz * dwp_dw - dzp_dw * dwp_dz;
  if (std::abs(det) == 0.0 || !std::isfinite(std::abs(det))) throw NumericError("pullback check: degenerate Jacobian");

  const cplx w_minus = glue.s / pt.w;
  PullbackResult out;
  out.jacobian_det_fd = det;
  out.ratio_fd = (det / w_minus) / (1.0 / pt.w);

  // z' = z + xi has dz'/dz = 1, dz'/dw = 0; w' = s w^-1.
  const Monomial w_image{1.0, 1, -1};
  const Monomial det_sym = Monomial{1.0, 0, 0} * w_image.d_dw();
  const Monomial plus_coeff{1.0, 0, -1};
  out.ratio_symbolic = (det_sym / w_image) / plus_coeff;
  return out;
}

NeckPoint u0_map(cplx z, cplx eta) { return {z, std::exp(cplx(0.0, 2.0 * kPi) * eta)}; }

cplx torus_cycle_integral(const NeckChartSpec& chart, double rho, int n) {
  chart.validate();
  if (!(rho > 0.0)) throw DomainError("torus cycle: radius must be positive");
  if (n < 4) throw DomainError("torus cycle: grid too coarse");
  const double pe = chart.p_exp(), qe = chart.q_exp();
  auto section = [&](double x, double y) {
    const cplx z = x + y * chart.tau;
    const cplx w = rho * std::exp(cplx(0.0, 2.0 * kPi * (pe * x + qe * y)));
    return std::array<cplx, 2>{z, w};
  };
  const double cell = 1.0 / n;
  const double h = 1e-6;
  cplx total(0.0, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = (i + 0.5) * cell, y = (j + 0.5) * cell;
      const auto c = section(x, y);
      const auto xp = section(x + h, y), xm = section(x - h, y);
      const auto yp = section(x, y + h), ym = section(x, y - h);
      const cplx zx = (xp[0] - xm[0]) / (2 * h), zy = (yp[0] - ym[0]) / (2 * h);
      const cplx wx = (xp[1] - xm[1]) / (2 * h), wy = (yp[1] - ym[1]) / (2 * h);
      total += (zx * wy - zy * wx) / c[1];
    }
  }
  return total * cell * cell;
}

}  // namespace k3neck
