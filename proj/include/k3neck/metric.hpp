#pragma once

// The complete Kaehler metric on the neck: mollifier, smooth cutoff, theta_s
// and Psi_s, the regularized maximum used to patch weights, and the model
// metric (b0/Im tau) i dz^dzbar + (2b/pi) i dw^dwbar/|w|^2 with its
// determinant, Ricci residual and radial lengths.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "k3neck/elliptic.hpp"
#include "k3neck/neck.hpp"

namespace k3neck {

// 1 / integral_{-1}^{1} e^{1/(x^2-1)} dx, by adaptive Gauss-Kronrod.
double mollifier_constant();

// a e^{1/(x^2-1)} on |x| < 1, else 0.
double mollifier_eta(double x);

// integral_{-1}^{u} eta, with F(0) = 1/2 exactly, 0 below -1 and 1 above 1.
double mollifier_cdf(double u);

// integral_{v}^{1} x eta(x) dx (even in v, 0 for |v| >= 1).
double mollifier_upper_moment(double v);

struct CutoffSpec {
  double r = 2.0;
  double r2 = 1.5;
  double r1 = 1.2;

  void validate() const;
  double delta() const { return (r - r2) / 4.0; }
  // The step being smoothed sits at r - (r - r2)/2.
  double jump() const { return r - (r - r2) / 2.0; }
};

// eta_delta * 1_{|x| < jump}: 1 on |x| < r2, 0 on |x| >= r - delta.
double cutoff_f_tilde(double x, const CutoffSpec& spec);

// (log(t^2 / |s|))^2
double theta_s(double t, cplx s);

// f~(|w|) theta_s(|w|) inside W; 0 outside (|w| >= r).
double psi_s(const NeckPoint& pt, const CutoffSpec& spec, cplx s);

// M_gamma(t1, t2) = E[max(t1 + h1, t2 + h2)] with h_j ~ gamma_j^{-1} eta(h / gamma_j).
double regularized_max(double t1, double t2, std::pair<double, double> gamma = {1.0, 1.0});

struct WeightSampler {
  enum class Role { phi_L, phi_C };
  std::function<double(const NeckPoint&)> surface;
  Role role = Role::phi_L;
};

// M_{(1,1)}(phi_L(pt), phi_C(pt) + log eps)
double patch_weights(const WeightSampler& phiL, const WeightSampler& phiC, double eps, const NeckPoint& pt);

// Model samplers with the separation the construction needs: phi_L minus
// (phi_C + log eps) is >= 3 for |w| >= r1 and <= -3 for |w| <= sqrt(eps0) r.
std::pair<WeightSampler, WeightSampler> model_weight_samplers(const CutoffSpec& spec, double eps0, double eps);

struct NeckMetricSpec {
  double b = 0.5;
  std::int64_t b0 = 3;
  cplx tau{0.0, 1.0};
  cplx s{0.01, 0.0};
  double eps0 = 0.25;
  double r = 2.0;

  void validate() const;
  // Radius of the model region W_{eps0} = {|w| < sqrt(eps0) r}.
  double model_radius() const { return std::sqrt(eps0) * r; }
};

// Diagonal entries (g_zzbar, g_wwbar) at the point with |w|^2 = w2.
template <class T>
std::pair<T, T> neck_metric_entries(T w2, const NeckMetricSpec& spec) {
  const T pi = T(3.14159265358979323846264338327950288L);
  return {T(2) * T(spec.b0) / T(spec.tau.imag()), T(4) * T(spec.b) / (pi * w2)};
}

Eigen::Matrix2d neck_metric_matrix(const NeckPoint& pt, const NeckMetricSpec& spec);

// 8 b b0 / (pi Im tau |w|^2)
double neck_metric_det_formula(double w_abs, const NeckMetricSpec& spec);

// Ricci curvature relative to the metric: |(Delta_w log det)/4| / g_wwbar,
// with the Laplacian from second differences along w/|w| and i w/|w|,
// evaluated in long double. Vanishes identically in exact arithmetic.
double ricci_check(const NeckPoint& pt, const NeckMetricSpec& spec, double h = 1e-4);

// Riemannian length of the radial segment t0 <= |w| <= t1 under
// |v|^2 = g_wwbar |dw(v)|^2, by quadrature in u = log t.
double radial_length(double t0, double t1, const NeckMetricSpec& spec);

}  // namespace k3neck
