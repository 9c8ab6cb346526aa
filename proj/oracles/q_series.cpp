#include "q_series.hpp"

#include <cmath>
#include <stdexcept>

namespace k3neck::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

double divisor_sigma(int n, int power) {
  double s = 0.0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) s += std::pow(static_cast<double>(d), power);
  }
  return s;
}

cplx nome(cplx tau) { return std::exp(cplx(0.0, 2.0 * kPi) * tau); }

cplx sigma_series(cplx q, int power, int terms) {
  cplx sum(0.0, 0.0);
  cplx qn(1.0, 0.0);
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    if (std::abs(qn) < 1e-300) break;
    sum += divisor_sigma(n, power) * qn;
  }
  return sum;
}

}  // namespace

cplx eisenstein_qseries(cplx tau, int k, int terms) {
  if (!(tau.imag() > 0.0)) throw std::domain_error("q-series needs Im tau > 0");
  const cplx q = nome(tau);
  const cplx two_pi_i(0.0, 2.0 * kPi);
  if (k == 2) {
    const double zeta4 = std::pow(kPi, 4) / 90.0;
    return 2.0 * zeta4 + 2.0 * std::pow(two_pi_i, 4) / 6.0 * sigma_series(q, 3, terms);
  }
  if (k == 3) {
    const double zeta6 = std::pow(kPi, 6) / 945.0;
    return 2.0 * zeta6 + 2.0 * std::pow(two_pi_i, 6) / 120.0 * sigma_series(q, 5, terms);
  }
  throw std::domain_error("q-series oracle implements k = 2, 3 only");
}

cplx j_qseries(cplx tau, int terms) {
  if (!(tau.imag() > 0.0)) throw std::domain_error("q-series needs Im tau > 0");
  const cplx q = nome(tau);
  const cplx e4 = 1.0 + 240.0 * sigma_series(q, 3, terms);
  cplx prod(1.0, 0.0);
  cplx qn(1.0, 0.0);
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    if (std::abs(qn) < 1e-300) break;
    prod *= std::pow(1.0 - qn, 24);
  }
  return e4 * e4 * e4 / (q * prod);
}

}  // namespace k3neck::oracle
