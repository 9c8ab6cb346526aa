#pragma once

// Divisor classes on CP^2 blown up at nine points, written d*H - sum k_i E_i,
// with the intersection form H.H = 1, H.E_i = 0, E_i.E_j = -delta_ij.

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "k3neck/elliptic.hpp"
#include "k3neck/side.hpp"

namespace k3neck {

struct DivisorClass {
  std::int64_t d = 0;
  std::array<std::int64_t, 9> k{};

  static DivisorClass H();
  static DivisorClass E(int i);  // i in 1..9, the class E_i (k_i = -1)
  static DivisorClass uniform(std::int64_t d, std::int64_t k);

  bool has_uniform_k() const;
  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  bool operator==(const DivisorClass& o) const = default;
  std::string to_string() const;
};

// c_H * H - sum c_E[i] E_i with complex coefficients.
struct ComplexDivisor {
  cplx c_H{0.0, 0.0};
  std::array<cplx, 9> c_E{};
};

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b);
cplx intersect(const ComplexDivisor& a, const DivisorClass& b);

// -K = 3H - sum E_i
DivisorClass anticanonical();

// 10x10 Gram matrix in the basis (H, E_1, ..., E_9).
Eigen::Matrix<double, 10, 10> gram_matrix();
// (number of positive, number of negative) eigenvalues.
std::pair<int, int> signature(const Eigen::Matrix<double, 10, 10>& gram);

struct AmpleVerdict {
  bool certified = false;
  std::string reason;  // empty when certified
};

// Sufficient test for uniform classes d*H - k*sum E_i: k >= 2, d >= 3k + 1 and
// d^2/k^2 - 1 >= 9, all in integers.
AmpleVerdict certify_ampleness(const DivisorClass& D);

inline constexpr std::int64_t kDefaultMatchDMax = 50;

// Uniform classes with the same d - 3k as Lplus (hence the same degree on -K),
// certified ample, d <= dmax; Lplus itself always comes first.
std::vector<DivisorClass> match_pair(const DivisorClass& Lplus, std::int64_t dmax = kDefaultMatchDMax);
bool is_matched(const DivisorClass& a, const DivisorClass& b);

// The involution identifies H^- with H^+ and E_i^- with E_i^+, so on
// coefficient vectors it is the identity; only the side label flips.
DivisorClass involution_pullback(const DivisorClass& D, Side side);

// xi = ((p^-.L^-) - (p^+.L^+)) / b0 reduced into the fundamental parallelogram,
// where b0 = L^+.(-K) = L^-.(-K) must be nonzero.
cplx xi_offset(const DivisorClass& Lp, const DivisorClass& Lm, const ComplexDivisor& pplus,
               const ComplexDivisor& pminus, const ComplexLattice& lattice);

}  // namespace k3neck
