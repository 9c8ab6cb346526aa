#pragma once

// q-expansions on the lattice <1, tau>, q = e^{2 pi i tau}.

#include <complex>

namespace k3neck::oracle {

using cplx = std::complex<double>;

// G_{2k} = 2 zeta(2k) + 2 (2 pi i)^{2k} / (2k-1)! * sum sigma_{2k-1}(n) q^n, k = 2 or 3.
cplx eisenstein_qseries(cplx tau, int k, int terms = 400);

// j = E4^3 / Delta with E4 = 1 + 240 sum sigma_3(n) q^n, Delta = q prod (1 - q^n)^24.
cplx j_qseries(cplx tau, int terms = 400);

}  // namespace k3neck::oracle
