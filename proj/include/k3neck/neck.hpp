#pragma once

// Quotient charts of the tubular neighbourhood W = {|w| < r} / ~ with
// (z, w) ~ (z + 1, e^{2 pi i p} w) ~ (z + tau, e^{2 pi i q} w), the annulus
// V_s, the gluing map f_s(z, w) = (z + xi, s / w) and the side-swapping
// involution.

#include <array>
#include <complex>

#include "k3neck/elliptic.hpp"
#include "k3neck/side.hpp"

namespace k3neck {

struct NeckChartSpec {
  cplx tau{0.0, 1.0};
  double p = 0.0;
  double q = 0.0;
  double r = 2.0;
  Side side = Side::plus;

  void validate() const;
  // Exponents of the deck factors on this side (negated on the minus side).
  double p_exp() const { return side == Side::plus ? p : -p; }
  double q_exp() const { return side == Side::plus ? q : -q; }
  NeckChartSpec opposite() const;
};

struct NeckPoint {
  cplx z;
  cplx w;
};

struct GlueParams {
  cplx s{0.01, 0.0};
  cplx xi{0.0, 0.0};
  double eps0 = 0.25;

  void validate() const;
};

enum class Region { inside_excluded_core, in_Vs, in_Ms_bulk, outside_W };
std::string to_string(Region r);

enum class Loop { alpha, beta };

// Reduce z into the fundamental parallelogram, paying for each unit step in 1
// (then in tau) with the matching monodromy factor on w.
NeckPoint canonicalize(const NeckPoint& pt, const NeckChartSpec& chart);

// The deck image (z + m + n tau, e^{2 pi i (m p + n q)} w) on the chart's side.
NeckPoint deck(const NeckPoint& pt, const NeckChartSpec& chart, std::int64_t m, std::int64_t n);

// Distance between two classes: the z-difference is rounded to the nearest
// lattice vector and w is transported accordingly, so points straddling the
// parallelogram boundary compare correctly.
double class_distance(const NeckPoint& a, const NeckPoint& b, const NeckChartSpec& chart);

cplx monodromy(const NeckChartSpec& chart, Loop loop);

Region region_of(const NeckPoint& pt, const GlueParams& glue, const NeckChartSpec& chart);

// f_s from the given side to the opposite one: (z + xi, s / w) from plus,
// (z - xi, s / w) from minus. Requires pt in V_s.
NeckPoint transition_fs(const NeckPoint& pt, const GlueParams& glue, const NeckChartSpec& from_chart);

struct SidedPoint {
  NeckPoint pt;
  Side side;
  bool operator==(const SidedPoint& o) const {
    return pt.z == o.pt.z && pt.w == o.pt.w && side == o.side;
  }
};

// The involution model: same chart coordinates, other side.
SidedPoint involution_F(const SidedPoint& x);

// Laurent monomial c * s^a * w^b, enough to differentiate f_s exactly.
struct Monomial {
  double coef = 0.0;
  int s_pow = 0;
  int w_pow = 0;

  Monomial operator*(const Monomial& o) const { return {coef * o.coef, s_pow + o.s_pow, w_pow + o.w_pow}; }
  Monomial operator/(const Monomial& o) const { return {coef / o.coef, s_pow - o.s_pow, w_pow - o.w_pow}; }
  Monomial d_dw() const { return {coef * w_pow, s_pow, w_pow - 1}; }
};

struct PullbackResult {
  cplx ratio_fd;              // finite-difference Jacobian
  Monomial ratio_symbolic;    // exact: expected -1 * s^0 w^0
  cplx jacobian_det_fd;
};

// Ratio of f_s^*(dz^- ^ dw^- / w^-) to dz^+ ^ dw^+ / w^+ at pt. The
// convention eta^- = -dz ^ dw / w makes the glued form consistent.
PullbackResult two_form_pullback_check(const NeckPoint& pt, const GlueParams& glue, const NeckChartSpec& chart,
                                       double h = 1e-5);

// U_0 -> V_{0,inf}: [(z, eta)] -> [(z, e^{2 pi i eta})]
NeckPoint u0_map(cplx z, cplx eta);

// Integral of dz ^ dw / w over the torus cycle w = rho e^{2 pi i (p x + q y)},
// z = x + y tau, (x, y) in [0,1]^2, by a midpoint rule on an n x n grid with
// finite-difference tangents. Analytically 2 pi i (q - p tau) on the plus side.
cplx torus_cycle_integral(const NeckChartSpec& chart, double rho, int n = 64);

}  // namespace k3neck
