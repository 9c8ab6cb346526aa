#pragma once

// Brute-force and independent-quadrature reference values.

#include <array>
#include <complex>
#include <cstdint>

namespace k3neck::oracle {

using cplx = std::complex<double>;

// min over Gaussian integers mu + nu i near n(p + qi) of |n(p+qi) - (mu + nu i)|,
// by enumerating a 4x4 window of candidates in long double.
double min_distance_enumerated(long double p, long double q, std::int64_t n);

// Smallest n >= 1 with n * (pn/pd) and n * (qn/qd) both integers, by direct search.
std::int64_t first_gaussian_hit(std::int64_t pn, std::int64_t pd, std::int64_t qn, std::int64_t qd,
                                std::int64_t limit);

// integral_{-1}^{1} e^{1/(x^2-1)} dx by tanh-sinh.
double bump_integral();
// integral_{lo}^{hi} of the normalized bump, by tanh-sinh.
double normalized_bump_integral(double lo, double hi);
// M_{(1,1)}(0, 0) = E[max(h1, h2)] = 2 integral h eta(h) F(h) dh, by tanh-sinh.
double regularized_max_origin();

// rho(a l1 + b l2 + c l3), built one unit step at a time from the rule
// rho(x + y) = rho(x) rho(y) e^{pi i E(x, y)}, where E[i][j] = Im H(l_i, l_j).
cplx semicharacter_stepwise(const std::array<std::array<double, 3>, 3>& E, const std::array<cplx, 3>& rho_gen,
                            const std::array<std::int64_t, 3>& abc);

// -sum z_j - (q - p tau) reduced into {a + b tau : 0 <= a, b < 1}, in complex arithmetic.
cplx ninth_point_direct(cplx tau, const std::array<cplx, 8>& points, double p, double q);

}  // namespace k3neck::oracle
